"""Dual forms, differential operators and the cokernels ``C_P^d``.

A linear functional on degree-``l`` forms is stored by its values on the
monomials ``X0^s X1^(l-s)``. The factorial weights relating it to a
constant-coefficient differential operator live only in :func:`d_l_forward`
and :func:`d_l_inverse`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .apolarity import catalecticant, cactus_rank
from .forms import BinaryForm, apolar_apply
from .linalg import RationalMatrix, _frac, rank


@dataclass(frozen=True)
class DualVector:
    """Functional on degree-``degree`` forms; ``values[s] = phi(X0^s X1^(degree-s))``.

    Negative degrees are allowed and carry no values (the space is zero).
    """

    degree: int
    values: tuple

    def __post_init__(self):
        values = tuple(_frac(v) for v in self.values)
        if len(values) != max(self.degree + 1, 0):
            raise ValueError(f"degree {self.degree} dual vector needs {max(self.degree + 1, 0)} values")
        object.__setattr__(self, "values", values)

    @classmethod
    def zero(cls, degree: int) -> DualVector:
        return cls(degree, (0,) * max(degree + 1, 0))

    def __call__(self, r: BinaryForm) -> Fraction:
        if r.degree != self.degree:
            raise ValueError(f"cannot evaluate a degree-{self.degree} functional on a degree-{r.degree} form")
        return sum((a * b for a, b in zip(self.values, r.coeffs)), Fraction(0))

    def __add__(self, other: DualVector) -> DualVector:
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return DualVector(self.degree, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, c) -> DualVector:
        c = _frac(c)
        return DualVector(self.degree, tuple(c * v for v in self.values))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.values)


def _weight(l: int, s: int) -> int:
    return factorial(s) * factorial(l - s)


def d_l_forward(p: BinaryForm) -> DualVector:
    """The functional ``R -> p(d/dX0, d/dX1) R`` on degree-``l`` forms."""
    l = p.degree
    return DualVector(l, tuple(_weight(l, s) * c for s, c in enumerate(p.coeffs)))


def d_l_inverse(phi: DualVector) -> BinaryForm:
    l = phi.degree
    if l < 0:
        raise ValueError("no differential operator of negative order")
    return BinaryForm(l, tuple(v / _weight(l, s) for s, v in enumerate(phi.values)))


def transpose_mult(q: BinaryForm, phi: DualVector) -> DualVector:
    """Transpose of multiplication by ``q``: ``R -> phi(q * R)`` on degree ``l - d``."""
    d, l = q.degree, phi.degree
    if d > l:
        raise ValueError(f"multiplier degree {d} exceeds functional degree {l}")
    out = []
    for s in range(l - d + 1):
        out.append(sum((qj * phi.values[j + s] for j, qj in enumerate(q.coeffs) if qj), Fraction(0)))
    return DualVector(l - d, tuple(out))


def verify_duality(p: BinaryForm, q: BinaryForm) -> bool:
    """Check ``t(m_q)(D_l p) == D_{l-d}(q . p)``."""
    if q.degree > p.degree:
        raise ValueError(f"operator degree {q.degree} exceeds form degree {p.degree}")
    return transpose_mult(q, d_l_forward(p)) == d_l_forward(apolar_apply(q, p))


def fiber_map_matrix(phi: DualVector, d: int) -> RationalMatrix:
    """Matrix of ``Q -> t(m_Q)(phi)`` from degree-``d`` forms to degree ``l - d`` functionals.

    Column ``j`` is the image of ``X0^j X1^(d-j)``; it is a Hankel matrix.
    """
    l = phi.degree
    if not 0 <= d <= l:
        raise ValueError(f"degree {d} outside 0..{l}")
    return RationalMatrix(l - d + 1, d + 1, tuple(
        phi.values[s + j] for s in range(l - d + 1) for j in range(d + 1)))


def dual_coker_dim(phi: DualVector, d: int) -> int:
    """``dim coker(Q -> t(m_Q)(phi))`` computed on the dual side."""
    m = fiber_map_matrix(phi, d)
    return m.rows - rank(m)


def coker_dim(p: BinaryForm, d: int) -> int:
    """``dim C_P^d`` by brute force: ``(l - d + 1) - rank`` of the catalecticant."""
    m = catalecticant(p, d).matrix
    return m.rows - rank(m)


def coker_branch(l: int, d: int, crank: int) -> str:
    """Which case of the crank-based closed form applies."""
    if l + 2 - crank <= d <= l:
        return "zero"
    if crank <= d:
        return "middle"
    return "low"


def coker_dim_closed_form(l: int, d: int, crank: int) -> int:
    branch = coker_branch(l, d, crank)
    if branch == "zero":
        return 0
    if branch == "middle":
        return l - d + 1 - crank
    return l - 2 * d


def coker_dim_checked(p: BinaryForm, d: int) -> int:
    """:func:`coker_dim`, raising if it disagrees with the closed form."""
    s = coker_dim(p, d)
    expected = coker_dim_closed_form(p.degree, d, cactus_rank(p))
    if s != expected:
        raise ArithmeticError(f"cokernel dimension {s} != closed form {expected} at d={d}")
    return s
