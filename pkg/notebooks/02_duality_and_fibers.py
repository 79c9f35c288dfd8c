"""
Duality and the fibers of the rank-two moduli space
===================================================

A form P of degree l defines the functional D_l(P): R -> P(d/dX0, d/dX1) R on
degree-l forms. Under this identification the apolar action becomes the
transpose of multiplication. So the cokernel of Q -> t(m_Q)(D_l P) from degree
d has the same dimension as the cokernel of the catalecticant. For the splitting
type O(n1) + O(n2) with d = n1 - n2 and l = -2 - n2, that dimension is the fiber
dimension of the framed moduli space over [P]. It depends only on d and the
cactus rank of P.
"""

from apolar.apolarity import cactus_rank
from apolar.corpus import canonical_forms
from apolar.duality import (
    coker_branch, coker_dim, coker_dim_closed_form, d_l_forward, transpose_mult, verify_duality,
)
from apolar.forms import BinaryForm, apolar_apply, render
from apolar.moduli import SplittingType, describe, fiber_dim

X0, X1 = BinaryForm.linear(1, 0), BinaryForm.linear(0, 1)

p = X0 ** 3 * X1 + X1 ** 4 * 2
q = X0 * X1 - X1 ** 2
phi = d_l_forward(p)
print("D_4(P) values on X0^s X1^(4-s):", [str(v) for v in phi.values])
print("t(m_Q)(D_4 P)      :", [str(v) for v in transpose_mult(q, phi).values])
print("D_2(Q . P)         :", [str(v) for v in d_l_forward(apolar_apply(q, p)).values])
print("identity holds:", verify_duality(p, q))

# Fiber dimensions over a few quintics for O(-3) + O(-7), i.e. l = 5, d = 4.
print("\nO(-3) + O(-7):", describe(SplittingType.parse("-3,-7")).as_dict())
for form in [X0 ** 5, X0 ** 4 * X1, X0 ** 3 * X1 ** 2, X0 ** 5 + X1 ** 5]:
    print(f"  {render(form):22s} crank {cactus_rank(form)}  fiber dim {fiber_dim(-3, -7, form)}")

# The full table for l = 6: rows are cactus ranks, columns are d = 0..6.
l = 6
print(f"\ndim C_P^d for l = {l} (brute force, one representative per cactus rank)")
seen = {}
for form in canonical_forms(l):
    seen.setdefault(cactus_rank(form), form)
for r, form in sorted(seen.items()):
    brute = [coker_dim(form, d) for d in range(l + 1)]
    closed = [coker_dim_closed_form(l, d, r) for d in range(l + 1)]
    branches = "".join(coker_branch(l, d, r)[0] for d in range(l + 1))
    print(f"  crank {r}: {brute}  closed form agrees: {brute == closed}  branches: {branches}")
# branches: l = low (s = l - 2d), m = middle (s = l - d + 1 - r), z = zero
