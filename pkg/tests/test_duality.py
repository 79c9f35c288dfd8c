import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apolar.apolarity import cactus_rank
from apolar.corpus import canonical_forms, random_substitution
from apolar.duality import (
    DualVector, coker_branch, coker_dim, coker_dim_checked, coker_dim_closed_form, d_l_forward, d_l_inverse,
    dual_coker_dim, fiber_map_matrix, transpose_mult, verify_duality,
)
from apolar.forms import BinaryForm, multiply, substitute
from oracles import apolar_by_differentiation, rank_by_minors

X0, X1 = BinaryForm.linear(1, 0), BinaryForm.linear(0, 1)
rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def forms_of(l):
    return st.lists(rationals, min_size=l + 1, max_size=l + 1).map(lambda c: BinaryForm(l, c))


def duals_of(l):
    return st.lists(rationals, min_size=l + 1, max_size=l + 1).map(lambda v: DualVector(l, v))


degrees = st.integers(0, 7)


def test_dual_vector_basics():
    phi = DualVector(2, [1, 2, 3])
    assert phi(BinaryForm.monomial(1, 1)) == 2
    assert (phi + phi * 2).values == (3, 6, 9)
    assert DualVector(-3, []).is_zero()
    with pytest.raises(ValueError):
        DualVector(2, [1, 2])
    with pytest.raises(ValueError):
        phi(X0)


def test_d_l_frozen():
    # X0^2 X1 as an operator on cubics: only X0^2 X1 survives, with value 2! * 1! = 2
    phi = d_l_forward(BinaryForm.monomial(2, 1))
    assert phi.values == (0, 0, 2, 0)


@given(degrees.flatmap(lambda l: st.tuples(forms_of(l), forms_of(l))))
def test_d_l_is_apolar_pairing(pair):
    p, r = pair
    # D_l(P)(R) is the constant P(d/dX0, d/dX1) R
    assert d_l_forward(p)(r) == apolar_by_differentiation(p, r).coeffs[0]
    assert d_l_inverse(d_l_forward(p)) == p


@given(degrees.flatmap(lambda l: st.tuples(duals_of(l), st.integers(0, l))), st.data())
def test_transpose_mult_definition(args, data):
    phi, d = args
    q = data.draw(forms_of(d))
    out = transpose_mult(q, phi)
    for s in range(phi.degree - d + 1):
        r = BinaryForm.monomial(s, phi.degree - d - s)
        assert out(r) == phi(multiply(q, r))


@given(degrees.flatmap(lambda l: st.tuples(duals_of(l), st.integers(0, l))), st.data())
def test_transpose_mult_functorial(args, data):
    phi, d1 = args
    d2 = data.draw(st.integers(0, phi.degree - d1))
    q1, q2 = data.draw(forms_of(d1)), data.draw(forms_of(d2))
    assert transpose_mult(multiply(q1, q2), phi) == transpose_mult(q1, transpose_mult(q2, phi))
    assert transpose_mult(BinaryForm.constant(1), phi) == phi


@given(degrees.flatmap(lambda l: st.tuples(forms_of(l), st.integers(0, l))), st.data())
def test_duality_identity(args, data):
    p, d = args
    assert verify_duality(p, data.draw(forms_of(d)))


def test_degree_errors():
    with pytest.raises(ValueError):
        verify_duality(X0, X0 ** 2)
    with pytest.raises(ValueError):
        transpose_mult(X0 ** 3, DualVector(1, [1, 1]))
    with pytest.raises(ValueError):
        d_l_inverse(DualVector(-1, []))


# -- cokernel dimensions --------------------------------------------------------------------------

# l = 4, s = dim C^d for d = 0..4, per cactus rank
FROZEN_L4 = {1: [4, 3, 2, 1, 0], 2: [4, 2, 1, 0, 0], 3: [4, 2, 0, 0, 0]}


@pytest.mark.parametrize("p", [X0 ** 4, X0 ** 3 * X1, X0 ** 2 * X1 ** 2])
def test_coker_frozen_quartics(p):
    r = cactus_rank(p)
    assert [coker_dim(p, d) for d in range(5)] == FROZEN_L4[r]
    assert [coker_dim_closed_form(4, d, r) for d in range(5)] == FROZEN_L4[r]


@pytest.mark.parametrize("l, d, r, branch", [
    (6, 0, 1, "low"), (6, 3, 2, "middle"), (6, 6, 1, "middle"), (6, 5, 3, "zero"), (6, 2, 4, "low"),
])
def test_coker_branch(l, d, r, branch):
    assert coker_branch(l, d, r) == branch


@given(degrees.flatmap(lambda l: st.tuples(forms_of(l), st.integers(0, l))))
def test_coker_dim_dual_side_agrees(args):
    p, d = args
    if p.is_zero():
        return
    phi = d_l_forward(p)
    assert dual_coker_dim(phi, d) == coker_dim(p, d)
    m = fiber_map_matrix(phi, d)
    if m.rows <= 5 and m.cols <= 5:
        assert coker_dim(p, d) == m.rows - rank_by_minors(m.to_rows())
    assert coker_dim_checked(p, d) == coker_dim(p, d)


@pytest.mark.parametrize("seed", range(8))
def test_coker_dim_gl2_invariant(seed):
    rng = random.Random(seed)
    l = rng.randint(2, 7)
    for p in canonical_forms(l):
        q = substitute(p, random_substitution(rng))
        assert [coker_dim(q, d) for d in range(l + 1)] == [coker_dim(p, d) for d in range(l + 1)]
