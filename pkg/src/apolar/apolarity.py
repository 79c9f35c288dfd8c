"""Apolar ideals of binary forms.

For a nonzero form ``P`` of degree ``l`` the annihilator ``Ann(P)`` in
``Q[xi0, xi1]`` is a complete intersection generated by two coprime forms
``G1, G2`` with ``deg G1 + deg G2 = l + 2``. Everything here is read off the
catalecticant maps ``Q -> Q . P`` one degree at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .forms import (
    XI_NAMES, BinaryForm, apolar_apply, gcd_forms, is_squarefree, multiply,
    normalize, render,
)
from .linalg import RationalMatrix, in_span, kernel_basis, same_span


@dataclass(frozen=True)
class Catalecticant:
    """Matrix of ``Q -> Q . P`` from degree ``d`` to degree ``l - d``.

    Column ``j`` holds the coefficients of ``(xi0^j xi1^(d-j)) . P``.
    """

    form: BinaryForm
    d: int
    matrix: RationalMatrix

    @property
    def target_degree(self) -> int:
        return self.form.degree - self.d


@dataclass(frozen=True)
class ApolarProfile:
    form: BinaryForm
    d1: int
    d2: int
    g1: BinaryForm
    g2: BinaryForm
    waring_rank: int
    cactus_rank: int
    equal_degrees: bool

    def as_dict(self) -> dict:
        return {
            "d1": self.d1,
            "d2": self.d2,
            "g1": render(self.g1, XI_NAMES),
            "g2": render(self.g2, XI_NAMES),
            "waring_rank": self.waring_rank,
            "cactus_rank": self.cactus_rank,
            "equal_degrees": self.equal_degrees,
        }


def _require_nonzero(p: BinaryForm):
    if p.is_zero():
        raise ValueError("the zero form has no apolar profile")


def catalecticant(p: BinaryForm, d: int) -> Catalecticant:
    _require_nonzero(p)
    if not 0 <= d <= p.degree:
        raise ValueError(f"degree {d} outside 0..{p.degree}")
    columns = [apolar_apply(BinaryForm.monomial(j, d - j), p).coeffs for j in range(d + 1)]
    return Catalecticant(p, d, RationalMatrix.from_columns(columns, rows=p.degree - d + 1))


def ann_basis(p: BinaryForm, d: int) -> list:
    """Basis of ``Ann(P)_d`` as coefficient vectors (reduced echelon normal form).

    Degrees above ``deg P`` are allowed: there the whole graded piece annihilates.
    """
    _require_nonzero(p)
    if d < 0:
        raise ValueError("negative degree")
    if d > p.degree:
        return [tuple(int(i == j) for i in range(d + 1)) for j in range(d + 1)]
    return kernel_basis(catalecticant(p, d).matrix)


def ann_dim(p: BinaryForm, d: int) -> int:
    """``dim Ann(P)_d`` by brute force (kernel of the catalecticant)."""
    return len(kernel_basis(catalecticant(p, d).matrix))


def ann_dim_closed_form(l: int, d1: int, d2: int, d: int) -> int:
    """``dim Ann(P)_d`` from the generator degrees alone."""
    if d2 <= d <= l:
        return 2 * d - l
    if d1 <= d < d2:
        return d + 1 - d1
    return 0


def multiples(g: BinaryForm, degree: int) -> list:
    """Coefficient vectors of ``m * g`` for all monomials ``m`` of the fitting degree."""
    k = degree - g.degree
    if k < 0:
        return []
    return [multiply(BinaryForm.monomial(j, k - j), g).coeffs for j in range(k + 1)]


def first_degree(p: BinaryForm) -> int:
    """Least ``d >= 1`` with ``Ann(P)_d != 0``."""
    _require_nonzero(p)
    d = 1
    while not ann_basis(p, d):
        d += 1
    return d


def pencil_squarefree_member(g1: BinaryForm, g2: BinaryForm) -> Optional[BinaryForm]:
    """A squarefree element of the pencil spanned by ``g1, g2``, if one exists.

    Tries ``g1``, ``g2`` and then ``g1 + t*g2`` for ``t = 1 .. deg(g1)*deg(g2) + 1``.
    """
    candidates = [g1, g2] + [g1 + g2 * t for t in range(1, g1.degree * g2.degree + 2)]
    for c in candidates:
        if not c.is_zero() and is_squarefree(c):
            return c
    return None


def sylvester_generators(p: BinaryForm) -> ApolarProfile:
    _require_nonzero(p)
    l = p.degree
    d1 = first_degree(p)
    d2 = l + 2 - d1
    if d1 < d2:
        (v1,) = ann_basis(p, d1)
        g1 = normalize(BinaryForm(d1, v1))
        sub = multiples(g1, d2)
        v2 = next(v for v in ann_basis(p, d2) if not in_span(v, sub))
        g2 = normalize(BinaryForm(d2, v2))
        waring = d1 if is_squarefree(g1) else d2
    else:
        v1, v2 = ann_basis(p, d1)
        g1, g2 = normalize(BinaryForm(d1, v1)), normalize(BinaryForm(d2, v2))
        if pencil_squarefree_member(g1, g2) is None:
            raise ArithmeticError(f"no squarefree element in the degree-{d1} pencil of {render(p)}")
        waring = d1
    return ApolarProfile(p, d1, d2, g1, g2, waring, d1, d1 == d2)


def waring_rank(p: BinaryForm) -> int:
    return sylvester_generators(p).waring_rank


def cactus_rank(p: BinaryForm) -> int:
    return first_degree(p)


def cactus_from_waring(l: int, rk: int) -> int:
    """Cactus rank implied by the Waring rank."""
    return rk if 2 * rk <= l + 2 else l + 2 - rk


def is_power(p: BinaryForm) -> bool:
    """``P`` is a scalar multiple of ``lambda^l`` (equivalently ``Ann(P)_1 != 0``)."""
    _require_nonzero(p)
    return p.degree == 0 or ann_dim(p, 1) > 0


def generic_cactus_rank(l: int) -> int:
    return (l + 2) // 2


def check_profile(profile: ApolarProfile) -> list:
    """Names of the structural properties violated by ``profile`` (empty when sound)."""
    p, bad = profile.form, []
    l = p.degree
    if not (profile.d1 <= profile.d2 and profile.d1 + profile.d2 == l + 2):
        bad.append("degrees")
    if gcd_forms(profile.g1, profile.g2).degree != 0:
        bad.append("coprime")
    for name, g in (("g1", profile.g1), ("g2", profile.g2)):
        if g.degree <= l and not apolar_apply(g, p).is_zero():
            bad.append(f"{name} annihilates")
    if profile.cactus_rank != profile.d1 or not 1 <= profile.cactus_rank <= (l + 2) // 2:
        bad.append("cactus")
    if cactus_from_waring(l, profile.waring_rank) != profile.cactus_rank:
        bad.append("waring/cactus relation")
    return bad


def generated_subspace(profile: ApolarProfile, d: int) -> list:
    """Spanning vectors of ``(G1, G2)_d``."""
    return multiples(profile.g1, d) + multiples(profile.g2, d)


def generates_in_degree(profile: ApolarProfile, d: int) -> bool:
    """``(G1, G2)_d == Ann(P)_d`` as subspaces."""
    return same_span(generated_subspace(profile, d), ann_basis(profile.form, d), d + 1)
