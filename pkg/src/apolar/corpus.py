"""Canonical and seeded random forms for checks, census and notebooks."""

from __future__ import annotations

import random
from fractions import Fraction

from .forms import BinaryForm, LinearSubstitution


def random_form(rng: random.Random, l: int, bound: int) -> BinaryForm:
    """Nonzero form with integer coefficients uniform in ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("coefficient bound must be positive")
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(l + 1)]
        if any(coeffs):
            return BinaryForm(l, coeffs)


def random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_rational_form(rng: random.Random, l: int, bound: int = 9, nonzero: bool = True) -> BinaryForm:
    while True:
        p = BinaryForm(l, [random_rational(rng, bound) for _ in range(l + 1)])
        if not nonzero or not p.is_zero():
            return p


def random_substitution(rng: random.Random, bound: int = 5) -> LinearSubstitution:
    while True:
        g = LinearSubstitution(*(random_rational(rng, bound) for _ in range(4)))
        if g.det != 0:
            return g


def random_independent_linear_forms(rng: random.Random, count: int, bound: int = 9) -> list:
    """``count`` pairwise linearly independent rational linear forms."""
    out = []
    while len(out) < count:
        a0, a1 = random_rational(rng, bound), random_rational(rng, bound)
        if a0 == 0 and a1 == 0:
            continue
        if all(a0 * b.coeffs[0] - a1 * b.coeffs[1] != 0 for b in out):
            out.append(BinaryForm.linear(a0, a1))
    return out


def canonical_forms(l: int) -> list:
    """Hand-picked forms of degree ``l`` covering every cactus stratum."""
    x0, x1 = BinaryForm.linear(1, 0), BinaryForm.linear(0, 1)
    forms = [BinaryForm.monomial(m, l - m) for m in range(l + 1)]
    forms.append((x0 + x1) ** l)
    if l >= 1:
        forms.append(x0 ** l + x1 ** l)
        # products of distinct linear forms (squarefree)
        prod = BinaryForm.constant(1)
        for i in range(l):
            prod = prod * BinaryForm.linear(1, i)
        forms.append(prod)
    if l >= 2:
        forms.append(x0 ** (l - 2) * x1 * (x0 + x1))
        forms.append(x0 ** (l - 1) * (x0 + x1))
        forms.append(x0 ** l + (x0 + x1) ** l)
    if l >= 3:
        forms.append(x0 ** l + x1 ** l + (x0 + x1) ** l)
        forms.append(x0 ** (l - 3) * x1 * (x0 + x1) * (x0 - x1))
        k = l // 2
        forms.append(x0 ** k * x1 ** (l - k - 1) * (x0 + x1))
    unique = []
    for p in forms:
        if not p.is_zero() and p not in unique:
            unique.append(p)
    return unique


def form_corpus(l: int, seed: int, count: int = 30, bound: int = 5) -> list:
    """Canonical forms of degree ``l`` topped up with seeded random ones to ``count``."""
    rng = random.Random(f"corpus-{seed}-{l}")
    forms = canonical_forms(l)
    while len(forms) < count:
        if rng.random() < 0.5:
            forms.append(random_form(rng, l, bound))
        else:
            # degenerate on purpose: a power of a linear form times a random factor
            k = rng.randint(1, l) if l >= 1 else 0
            lam = random_independent_linear_forms(rng, 1, bound)[0]
            forms.append(lam ** k * random_form(rng, l - k, bound))
    return forms
