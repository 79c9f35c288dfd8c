"""
Cactus strata of binary quartics
================================

Quartics have cactus rank 1, 2 or 3. Rank 1 is the Veronese locus of fourth
powers. Rank 2 is the rest of the hypersurface g3 = 0, where g3 is the Hankel
(catalecticant) determinant. Everything else has rank 3. Along the way we
recover the discriminant identity Delta = g2^3 - 27 g3^2.
"""

from apolar.apolarity import sylvester_generators
from apolar.forms import is_squarefree, partial, resultant
from apolar.moduli import quartic_invariants, quartic_stratum
from apolar.suites import quartic_table

print(f"{'quartic':34s} {'rk':>3s} {'crank':>6s} {'stratum':>8s} {'g2':>8s} {'g3':>8s} {'Delta':>10s}")
for label, p, *_ in quartic_table():
    prof = sylvester_generators(p)
    inv = quartic_invariants(p)
    print(f"{label:34s} {prof.waring_rank:3d} {prof.cactus_rank:6d} {quartic_stratum(p):8d} "
          f"{str(inv.g2):>8s} {str(inv.g3):>8s} {str(inv.delta):>10s}")

# The discriminant is also the resultant of the two partial derivatives,
# up to the fixed factor 4096 in this normalization.
print("\nresultant of partials / Delta:")
for label, p, *_ in quartic_table():
    inv = quartic_invariants(p)
    ratio = resultant(partial(p, 0), partial(p, 1)) / inv.delta if inv.delta else None
    print(f"  {label:34s} {str(ratio):>6s}   squarefree: {is_squarefree(p)}")

# For the family X0 X1 (X0 + X1)(X0 + t X1), g3 is a cubic in t, namely
# -(t - 2)(t + 1)(2t - 1)/432. Its roots t = 2, -1, 1/2 are the harmonic
# cross-ratios, which is exactly where the cactus rank drops to 2.
