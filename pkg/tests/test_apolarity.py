import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apolar.apolarity import (
    ann_basis, ann_dim, ann_dim_closed_form, cactus_from_waring, cactus_rank, catalecticant, check_profile,
    first_degree, generates_in_degree, generic_cactus_rank, is_power, multiples, pencil_squarefree_member,
    sylvester_generators, waring_rank,
)
from apolar.corpus import canonical_forms, random_independent_linear_forms, random_substitution
from apolar.forms import BinaryForm, apolar_apply, normalize, substitute
from oracles import apolar_by_differentiation, rank_by_minors, sum_of_powers

X0, X1 = BinaryForm.linear(1, 0), BinaryForm.linear(0, 1)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))
nonzero_forms = st.integers(1, 7).flatmap(
    lambda l: st.lists(rationals, min_size=l + 1, max_size=l + 1)
    .map(lambda c: BinaryForm(l, c)).filter(lambda p: not p.is_zero()))


def monomial_ann_dim(m, n, d):
    """Monomials xi0^a xi1^b with a + b = d that kill X0^m X1^n: a > m or b > n."""
    return sum(1 for a in range(d + 1) if a > m or d - a > n)


# -- catalecticant and graded pieces -------------------------------------------------------

def test_catalecticant_frozen():
    cat = catalecticant(X0 ** 2 * X1 ** 2, 2)
    assert cat.target_degree == 2
    # column j is xi0^j xi1^(2-j) applied to X0^2 X1^2; row i is the X0^i X1^(2-i) coefficient
    assert cat.matrix.to_rows() == [[0, 0, 2], [0, 4, 0], [2, 0, 0]]


@pytest.mark.parametrize("m", range(0, 5))
@pytest.mark.parametrize("n", range(0, 5))
def test_monomial_dims_match_count(m, n):
    if m + n == 0:
        return
    p = BinaryForm.monomial(m, n)
    for d in range(m + n + 1):
        assert ann_dim(p, d) == monomial_ann_dim(m, n, d)


@given(nonzero_forms, st.data())
def test_ann_dim_matches_minor_rank(p, data):
    d = data.draw(st.integers(0, min(p.degree, 4)))
    columns = [apolar_by_differentiation(BinaryForm.monomial(j, d - j), p).coeffs for j in range(d + 1)]
    rows = [[col[i] for col in columns] for i in range(p.degree - d + 1)]
    if p.degree - d + 1 <= 5:
        assert ann_dim(p, d) == d + 1 - rank_by_minors(rows)
    for v in ann_basis(p, d):
        assert apolar_apply(BinaryForm(d, v), p).is_zero()


@given(nonzero_forms)
def test_profile_structure(p):
    prof = sylvester_generators(p)
    assert check_profile(prof) == []
    for d in range(p.degree + 1):
        assert ann_dim(p, d) == ann_dim_closed_form(p.degree, prof.d1, prof.d2, d)
    for d in range(1, p.degree + 3):
        assert generates_in_degree(prof, d)


def test_ann_basis_above_degree_is_everything():
    assert len(ann_basis(X0 ** 2, 4)) == 5


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        sylvester_generators(BinaryForm.zero(3))
    with pytest.raises(ValueError):
        catalecticant(X0 ** 3, 4)


# -- frozen profiles ---------------------------------------------------------------------------

@pytest.mark.parametrize("p, d1, d2, g1, rk", [
    (X0 ** 4, 1, 5, X1, 1),
    (X0 ** 3 * X1 * (X0 + X1), 3, 4, X1 ** 3, 4),
    (X0 ** 2 * X1 ** 3, 3, 4, X0 ** 3, 4),
    (X0 ** 5 + X1 ** 5, 2, 5, X0 * X1, 2),
    (X0 ** 3 * X1, 2, 4, X1 ** 2, 4),
    (X0 * X1, 2, 2, None, 2),
    (BinaryForm.constant(1), 1, 1, None, 1),
])
def test_frozen_profiles(p, d1, d2, g1, rk):
    prof = sylvester_generators(p)
    assert (prof.d1, prof.d2, prof.waring_rank, prof.cactus_rank) == (d1, d2, rk, d1)
    if g1 is not None:
        assert prof.g1 == normalize(g1)
    assert prof.equal_degrees == (d1 == d2)


def test_x0_cubed_x1_rank():
    # X0^3 X1 is a tangent-line quartic: rank 4, cactus rank 2
    prof = sylvester_generators(X0 ** 3 * X1)
    assert (prof.cactus_rank, prof.waring_rank) == (2, 4)


def test_equal_degree_pencil():
    p = X0 ** 4 + X1 ** 4 + (X0 + X1) ** 4
    prof = sylvester_generators(p)
    assert prof.equal_degrees and prof.d1 == prof.d2 == 3 and prof.waring_rank == 3
    assert pencil_squarefree_member(prof.g1, prof.g2) is not None


def test_multiples():
    assert multiples(X0, 2) == [(X0 * X1).coeffs, (X0 * X0).coeffs]
    assert multiples(X0 ** 3, 2) == []


# -- sums of powers: decomposition known by construction ---------------------------------------

@pytest.mark.parametrize("seed", range(6))
def test_sum_of_distinct_powers(seed):
    rng = random.Random(seed)
    l = rng.randint(3, 8)
    r = rng.randint(1, (l + 1) // 2)
    lams = random_independent_linear_forms(rng, r, 6)
    weights = [Fraction(rng.choice([1, -1]) * rng.randint(1, 5)) for _ in range(r)]
    p = sum_of_powers(lams, l, weights)
    prof = sylvester_generators(p)
    assert prof.waring_rank == r and prof.cactus_rank == r
    # G1 is the product of the dual linear forms a1*xi0 - a0*xi1
    dual = BinaryForm.constant(1)
    for lam in lams:
        a1, a0 = lam.coeffs
        dual = dual * BinaryForm.linear(a1, -a0)
    if 2 * r < l + 2:
        assert prof.g1 == normalize(dual)


# -- helpers and invariance ---------------------------------------------------------------------

@pytest.mark.parametrize("l, rk, crank", [(4, 1, 1), (4, 4, 2), (4, 3, 3), (5, 5, 2), (6, 4, 4), (6, 5, 3)])
def test_cactus_from_waring(l, rk, crank):
    assert cactus_from_waring(l, rk) == crank


@pytest.mark.parametrize("l", range(0, 11))
def test_generic_cactus_rank(l):
    assert generic_cactus_rank(l) == (l + 2) // 2
    assert all(1 <= cactus_rank(p) <= generic_cactus_rank(l) for p in canonical_forms(l))


def test_is_power():
    assert is_power((X0 * 2 + X1) ** 5)
    assert not is_power(X0 ** 4 * X1)
    assert first_degree(X0 ** 4 * X1) == 2


@pytest.mark.parametrize("seed", range(10))
def test_ranks_are_gl2_invariant(seed):
    rng = random.Random(seed)
    for p in canonical_forms(rng.randint(2, 7)):
        g = random_substitution(rng)
        q = substitute(p, g)
        assert cactus_rank(q) == cactus_rank(p)
        assert waring_rank(q) == waring_rank(p)


@pytest.mark.parametrize("l", [3, 4, 5, 6])
def test_cactus_rank_lower_semicontinuous(l):
    # along the line P0 + t P1 the cactus rank is largest at generic t
    rng = random.Random(l)
    p0 = X0 ** (l - 1) * X1
    p1 = BinaryForm(l, [rng.randint(-3, 3) for _ in range(l + 1)])
    values = {t: cactus_rank(p0 + p1 * t) for t in range(1, 12) if not (p0 + p1 * t).is_zero()}
    generic = max(values.values())
    assert sum(1 for v in values.values() if v == generic) >= len(values) - l
    assert cactus_rank(p0) <= generic
