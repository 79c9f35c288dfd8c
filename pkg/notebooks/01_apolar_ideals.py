"""
Apolar ideals of binary forms
=============================

A degree-d form Q(xi0, xi1) acts on a form P(X0, X1) as the differential
operator Q(d/dX0, d/dX1). The forms that kill P make up the apolar ideal
Ann(P). For binary forms it has exactly two generators, of degrees d1 <= d2
with d1 + d2 = deg P + 2, and these two degrees give the Waring and cactus ranks.
"""

from apolar.apolarity import ann_dim, catalecticant, sylvester_generators
from apolar.forms import BinaryForm, XI_NAMES, apolar_apply, parse_expression, render

X0, X1 = BinaryForm.linear(1, 0), BinaryForm.linear(0, 1)

# The apolar action lowers degree: xi0^2 xi1 applied to X0^3 X1^2 is 12 X0 X1.
q = parse_expression("xi0^2*xi1", XI_NAMES)
p = parse_expression("X0^3*X1^2")
print(render(q, XI_NAMES), "applied to", render(p), "=", render(apolar_apply(q, p)))

# Ann(P)_d is the kernel of the catalecticant: column j is (xi0^j xi1^(d-j)) applied to P.
cat = catalecticant(p, 2)
print("\ncatalecticant of", render(p), "in degree 2:")
for row in cat.matrix.to_rows():
    print("   ", [str(x) for x in row])
print("graded dimensions dim Ann(P)_d, d = 0..5:", [ann_dim(p, d) for d in range(6)])

# For a monomial the ideal is generated by two pure powers.
prof = sylvester_generators(p)
print("\ngenerators:", render(prof.g1, XI_NAMES), "and", render(prof.g2, XI_NAMES))
print("Waring rank", prof.waring_rank, "| cactus rank", prof.cactus_rank)

# When the first generator is squarefree, its roots give a decomposition
# of P as a sum of d1 powers of linear forms.
examples = {
    "X0^5 + X1^5": X0 ** 5 + X1 ** 5,
    "X0^3 X1 (X0 + X1)": X0 ** 3 * X1 * (X0 + X1),
    "X0^2 X1^2 (X0 + X1)": X0 ** 2 * X1 ** 2 * (X0 + X1),
    "(X0 + 2 X1)^6": (X0 + X1 * 2) ** 6,
    "X0^4 + X1^4 + (X0 + X1)^4": X0 ** 4 + X1 ** 4 + (X0 + X1) ** 4,
}
print()
print(f"{'form':28s} {'d1':>3s} {'d2':>3s} {'rk':>3s} {'crank':>6s}  g1")
for name, form in examples.items():
    prof = sylvester_generators(form)
    print(f"{name:28s} {prof.d1:3d} {prof.d2:3d} {prof.waring_rank:3d} {prof.cactus_rank:6d}  "
          f"{render(prof.g1, XI_NAMES)}")

# X0^3 X1 (X0 + X1): the first generator is xi1^3, which is not squarefree, so the
# Waring rank jumps to the second degree even though the cactus rank stays at 3.
