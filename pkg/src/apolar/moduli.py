"""Numerical shadows of the moduli of affine bundles on the projective line.

A splitting type ``sum O(n_i)^(s_i)`` determines the cohomology space
``H^1 = sum (Q[X0, X1]_{l_i}^*)^(s_i)`` with ``l_i = -2 - n_i`` and the
automorphism group of upper-triangular block matrices acting on it by
transposed multiplication. For rank two (``O(n1) + O(n2)``) the fiber of the
framed non-degenerate moduli space over ``[D_l(P)]`` is the cokernel
``C_P^d`` with ``d = n1 - n2`` and ``l = -2 - n2``.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional

from .apolarity import cactus_rank, generic_cactus_rank
from .corpus import random_form
from .duality import DualVector, coker_dim, dual_coker_dim, transpose_mult
from .forms import BinaryForm, is_linear_power, multiply
from .linalg import RationalMatrix, rank


# -- splitting types -------------------------------------------------------------

@dataclass(frozen=True)
class SplittingType:
    """Pairs ``(n_i, s_i)`` with strictly decreasing ``n_i`` and ``s_i >= 1``."""

    summands: tuple

    def __post_init__(self):
        summands = tuple((int(n), int(s)) for n, s in self.summands)
        if not summands:
            raise ValueError("empty splitting type")
        if any(s < 1 for _, s in summands):
            raise ValueError("multiplicities must be positive")
        ns = [n for n, _ in summands]
        if any(a <= b for a, b in zip(ns, ns[1:])):
            raise ValueError(f"degrees {ns} are not strictly decreasing")
        object.__setattr__(self, "summands", summands)

    @classmethod
    def parse(cls, text: str) -> SplittingType:
        """Parse ``"n1:s1,n2:s2,..."``; a bare ``n`` means multiplicity one."""
        pairs = []
        for item in text.split(","):
            item = item.strip()
            if not item:
                raise ValueError(f"malformed splitting {text!r}")
            n, _, s = item.partition(":")
            try:
                pairs.append((int(n), int(s) if s else 1))
            except ValueError:
                raise ValueError(f"malformed splitting entry {item!r}") from None
        return cls(tuple(pairs))

    @property
    def degrees(self) -> tuple:
        return tuple(n for n, _ in self.summands)

    @property
    def multiplicities(self) -> tuple:
        return tuple(s for _, s in self.summands)

    @property
    def l_values(self) -> tuple:
        return tuple(-2 - n for n in self.degrees)

    def __len__(self):
        return len(self.summands)


@dataclass(frozen=True)
class ModuliDescriptor:
    splitting: SplittingType
    l_values: tuple
    h1_dim: int
    aut_block_degrees: tuple  # n_i - n_j above the diagonal, None below
    aut_dim: int

    def as_dict(self) -> dict:
        return {
            "splitting": [list(x) for x in self.splitting.summands],
            "l": list(self.l_values),
            "h1_dim": self.h1_dim,
            "aut_block_degrees": [list(row) for row in self.aut_block_degrees],
            "aut_dim": self.aut_dim,
        }


def describe(splitting: SplittingType) -> ModuliDescriptor:
    ns, ss = splitting.degrees, splitting.multiplicities
    m = len(ns)
    ls = splitting.l_values
    h1 = sum(s * max(l + 1, 0) for l, s in zip(ls, ss))
    blocks = tuple(tuple(ns[i] - ns[j] if i <= j else None for j in range(m)) for i in range(m))
    aut = sum(ss[i] * ss[j] * max(ns[i] - ns[j] + 1, 0) for i in range(m) for j in range(i, m))
    return ModuliDescriptor(splitting, ls, h1, blocks, aut)


# -- the group action on H^1 -----------------------------------------------------

@dataclass(frozen=True)
class H1Element:
    """``blocks[i]`` holds ``s_i`` functionals of degree ``l_i``."""

    splitting: SplittingType
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        if len(blocks) != len(self.splitting):
            raise ValueError("one block per summand required")
        for block, l, s in zip(blocks, self.splitting.l_values, self.splitting.multiplicities):
            if len(block) != s or any(v.degree != l for v in block):
                raise ValueError(f"block must hold {s} functionals of degree {l}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def zero(cls, splitting: SplittingType) -> H1Element:
        return cls(splitting, tuple(
            tuple(DualVector.zero(l) for _ in range(s))
            for l, s in zip(splitting.l_values, splitting.multiplicities)))


@dataclass(frozen=True)
class AutElement:
    """Upper-triangular block matrix ``A_ij`` of forms of degree ``n_i - n_j``.

    ``blocks[(i, j)]`` for ``i <= j`` is an ``s_i x s_j`` tuple of tuples of
    forms; missing off-diagonal blocks are zero. Diagonal blocks are scalar
    (degree 0) and must be invertible.
    """

    splitting: SplittingType
    blocks: dict = field(hash=False)

    def __post_init__(self):
        ns, ss = self.splitting.degrees, self.splitting.multiplicities
        m = len(ns)
        blocks = {}
        for (i, j), block in self.blocks.items():
            if not (0 <= i <= j < m):
                raise ValueError(f"block ({i}, {j}) is not on or above the diagonal")
            block = tuple(tuple(row) for row in block)
            deg = ns[i] - ns[j]
            if len(block) != ss[i] or any(len(row) != ss[j] for row in block):
                raise ValueError(f"block ({i}, {j}) must be {ss[i]}x{ss[j]}")
            if any(q.degree != deg for row in block for q in row):
                raise ValueError(f"block ({i}, {j}) entries must have degree {deg}")
            blocks[(i, j)] = block
        for i in range(m):
            if (i, i) not in blocks:
                raise ValueError(f"missing diagonal block {i}")
            diag = RationalMatrix.from_rows([[q.coeffs[0] for q in row] for row in blocks[(i, i)]])
            if rank(diag) != ss[i]:
                raise ValueError(f"diagonal block {i} is singular")
        for i in range(m):
            for j in range(i + 1, m):
                if (i, j) not in blocks:
                    blocks[(i, j)] = tuple(tuple(BinaryForm.zero(ns[i] - ns[j]) for _ in range(ss[j]))
                                           for _ in range(ss[i]))
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def identity(cls, splitting: SplittingType) -> AutElement:
        blocks = {}
        for i, s in enumerate(splitting.multiplicities):
            blocks[(i, i)] = tuple(tuple(BinaryForm.constant(int(a == b)) for b in range(s)) for a in range(s))
        return cls(splitting, blocks)

    @classmethod
    def rank2(cls, n1: int, n2: int, u1, q: BinaryForm, u2) -> AutElement:
        """The matrix ``((u1, q), (0, u2))`` for ``O(n1) + O(n2)``."""
        splitting = SplittingType(((n1, 1), (n2, 1)))
        return cls(splitting, {(0, 0): ((BinaryForm.constant(u1),),),
                               (0, 1): ((q,),),
                               (1, 1): ((BinaryForm.constant(u2),),)})


def compose(a: AutElement, b: AutElement) -> AutElement:
    """Block matrix product ``a * b``."""
    if a.splitting != b.splitting:
        raise ValueError("splitting types differ")
    ns, ss = a.splitting.degrees, a.splitting.multiplicities
    m = len(ns)
    blocks = {}
    for i in range(m):
        for k in range(i, m):
            rows = []
            for x in range(ss[i]):
                row = []
                for z in range(ss[k]):
                    acc = BinaryForm.zero(ns[i] - ns[k])
                    for j in range(i, k + 1):
                        for y in range(ss[j]):
                            acc = acc + multiply(a.blocks[(i, j)][x][y], b.blocks[(j, k)][y][z])
                    row.append(acc)
                rows.append(tuple(row))
            blocks[(i, k)] = tuple(rows)
    return AutElement(a.splitting, blocks)


def act(a: AutElement, phi: H1Element) -> H1Element:
    """``(A . phi)_i = sum_j t(m_{A_ij})(phi_j)``."""
    if a.splitting != phi.splitting:
        raise ValueError("splitting types differ")
    ls, ss = phi.splitting.l_values, phi.splitting.multiplicities
    m = len(ls)
    out = []
    for i in range(m):
        block = []
        for x in range(ss[i]):
            acc = DualVector.zero(ls[i])
            if ls[i] >= 0:
                for j in range(i, m):
                    for y in range(ss[j]):
                        acc = acc + transpose_mult(a.blocks[(i, j)][x][y], phi.blocks[j][y])
            block.append(acc)
        out.append(tuple(block))
    return H1Element(phi.splitting, tuple(out))


def act_rank2(u1, q: BinaryForm, u2, phi1: DualVector, phi2: DualVector):
    """``(u1*phi1 + t(m_q)(phi2), u2*phi2)`` for the rank-two group."""
    u1, u2 = Fraction(u1), Fraction(u2)
    if u1 == 0 or u2 == 0:
        raise ValueError("diagonal entries must be nonzero")
    if q.degree != phi2.degree - phi1.degree:
        raise ValueError(f"q must have degree {phi2.degree - phi1.degree}")
    return phi1 * u1 + transpose_mult(q, phi2), phi2 * u2


# -- fibers and strata -----------------------------------------------------------

def _rank2_params(n1: int, n2: int):
    if not n1 > n2:
        raise ValueError(f"need n1 > n2, got {n1}, {n2}")
    if n1 > -2:
        raise ValueError(f"need n1 <= -2, got {n1}")
    return -2 - n2, n1 - n2


def fiber_dim(n1: int, n2: int, p: BinaryForm) -> int:
    """Dimension of the framed moduli fiber over ``[D_l(P)]`` for ``O(n1) + O(n2)``."""
    l, d = _rank2_params(n1, n2)
    if p.is_zero():
        raise ValueError("the zero form does not define a point of the base")
    if p.degree != l:
        raise ValueError(f"form has degree {p.degree}, expected -2 - n2 = {l}")
    return coker_dim(p, d)


def fiber_dim_of_functional(n1: int, n2: int, phi: DualVector) -> int:
    """Same fiber dimension, computed from the functional ``phi`` directly."""
    l, d = _rank2_params(n1, n2)
    if phi.degree != l or phi.is_zero():
        raise ValueError(f"need a nonzero functional of degree {l}")
    return dual_coker_dim(phi, d)


@dataclass(frozen=True)
class StratumLabel:
    """Either a cactus stratum ``(l, r)`` or a fiber level set ``(l, d, s)``."""

    l: int
    r: Optional[int] = None
    d: Optional[int] = None
    s: Optional[int] = None

    def __post_init__(self):
        if self.r is not None:
            if self.d is not None or self.s is not None:
                raise ValueError("a label is either cactus or fiber-level")
            if not 1 <= self.r <= generic_cactus_rank(self.l):
                raise ValueError(f"cactus rank {self.r} out of range for l={self.l}")
        else:
            if self.d is None or self.s is None:
                raise ValueError("fiber-level labels need d and s")
            if not 0 <= self.d <= self.l or not 0 <= self.s <= self.l - self.d + 1:
                raise ValueError(f"fiber label (d={self.d}, s={self.s}) out of range for l={self.l}")

    @property
    def kind(self) -> str:
        return "cactus" if self.r is not None else "fiber"


def level_set_ranks(l: int, d: int, s: int) -> set:
    """Cactus ranks ``r`` whose stratum makes up the level set ``dim C^d = s``."""
    top = generic_cactus_rank(l)
    if s == l - 2 * d:
        ranks = range(d + 1, top + 1)
    elif s > l - 2 * d and s > 0:
        ranks = [l - d + 1 - s]
    elif s > l - 2 * d:
        ranks = range(l - d + 1, top + 1)
    else:
        ranks = []
    return {r for r in ranks if 1 <= r <= top}


def comparison_ranks(l: int, d: int, s: int) -> list:
    """The same level set from the two-range case split; one set per applicable range."""
    top = l // 2 + 1
    out = []
    if d <= l // 2:
        if l - 2 * d < s <= l - d:
            out.append({l - d + 1 - s})
        elif s == l - 2 * d:
            out.append(set(range(d + 1, top + 1)))
        else:
            out.append(set())
    if d >= l // 2:
        if 0 < s <= l - d:
            out.append({l - d + 1 - s})
        elif s == 0:
            out.append(set(range(l - d + 1, top + 1)))
        else:
            out.append(set())
    return [{r for r in ranks if 1 <= r <= top} for ranks in out]


def stratum_membership(p: BinaryForm, d: int):
    """The cactus stratum and the fiber level set containing ``[P]``."""
    if p.is_zero():
        raise ValueError("zero form")
    l = p.degree
    r = cactus_rank(p)
    s = coker_dim(p, d)
    if r not in level_set_ranks(l, d, s) or any(r not in ranks for ranks in comparison_ranks(l, d, s)):
        raise ArithmeticError(f"cactus rank {r} inconsistent with fiber level s={s} (l={l}, d={d})")
    return StratumLabel(l, r=r), StratumLabel(l, d=d, s=s)


# -- small degrees ---------------------------------------------------------------

class QuarticInvariants(NamedTuple):
    g2: Fraction
    g3: Fraction
    delta: Fraction
    j: Optional[Fraction]


def quartic_weights(p: BinaryForm) -> tuple:
    """``(a0, ..., a4)`` with ``p = a0 X0^4 + 4 a1 X0^3 X1 + 6 a2 X0^2 X1^2 + 4 a3 X0 X1^3 + a4 X1^4``."""
    if p.degree != 4:
        raise ValueError(f"expected a quartic, got degree {p.degree}")
    return tuple(p.coeffs[4 - k] / comb(4, k) for k in range(5))


def quartic_invariants(p: BinaryForm) -> QuarticInvariants:
    a0, a1, a2, a3, a4 = quartic_weights(p)
    g2 = a0 * a4 - 4 * a1 * a3 + 3 * a2 ** 2
    g3 = a0 * a2 * a4 + 2 * a1 * a2 * a3 - a2 ** 3 - a0 * a3 ** 2 - a1 ** 2 * a4
    delta = g2 ** 3 - 27 * g3 ** 2
    return QuarticInvariants(g2, g3, delta, g2 ** 3 / delta if delta else None)


def quartic_stratum(p: BinaryForm) -> int:
    """Cactus rank of a quartic from the Veronese locus and the zero set of ``g3``."""
    if p.is_zero():
        raise ValueError("zero form")
    if is_linear_power(p):
        return 1
    return 2 if quartic_invariants(p).g3 == 0 else 3


def quadratic_discriminant(p: BinaryForm) -> Fraction:
    """``a0 a2 - a1^2`` for ``p = a0 X0^2 + 2 a1 X0 X1 + a2 X1^2``."""
    if p.degree != 2:
        raise ValueError(f"expected a quadratic, got degree {p.degree}")
    a0, a1, a2 = p.coeffs[2], p.coeffs[1] / 2, p.coeffs[0]
    return a0 * a2 - a1 ** 2


def small_l_strata(p: BinaryForm) -> int:
    """Cactus rank for ``l`` in {2, 3} from the discriminant / Veronese cubic."""
    if p.is_zero():
        raise ValueError("zero form")
    if p.degree == 2:
        return 1 if quadratic_discriminant(p) == 0 else 2
    if p.degree == 3:
        return 1 if is_linear_power(p) else 2
    raise ValueError(f"expected degree 2 or 3, got {p.degree}")


# -- census ----------------------------------------------------------------------

@dataclass(frozen=True)
class CensusTable:
    l: int
    d: int
    samples: int
    seed: int
    coeff_bound: int
    counts: tuple  # ((crank, s), count), sorted

    @property
    def top_rank(self) -> int:
        return generic_cactus_rank(self.l)

    @property
    def top_fraction(self) -> Fraction:
        top = sum(c for (r, _), c in self.counts if r == self.top_rank)
        return Fraction(top, self.samples)

    def rows(self) -> list:
        return [(r, s, c) for (r, s), c in self.counts]

    def as_dict(self) -> dict:
        return {
            "l": self.l, "d": self.d, "samples": self.samples, "seed": self.seed,
            "coeff_bound": self.coeff_bound, "top_rank": self.top_rank,
            "top_fraction": self.top_fraction,
            "table": [{"crank": r, "fiber_dim": s, "count": c} for r, s, c in self.rows()],
        }


def _strata_of(args):
    coeffs, l, d = args
    p = BinaryForm(l, coeffs)
    return cactus_rank(p), coker_dim(p, d)


def census(l: int, d: int, samples: int, seed: int, coeff_bound: int, workers: int = 1) -> CensusTable:
    """Frequencies of ``(crank, dim C^d)`` over seeded random integer forms.

    The forms are drawn sequentially from ``seed`` before any evaluation, so
    the table does not depend on ``workers``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if l < 0 or not 0 <= d <= l:
        raise ValueError(f"need 0 <= d <= l, got l={l}, d={d}")
    rng = random.Random(seed)
    jobs = [(random_form(rng, l, coeff_bound).coeffs, l, d) for _ in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_strata_of, jobs, chunksize=16))
    else:
        results = [_strata_of(job) for job in jobs]
    counts = Counter(results)
    return CensusTable(l, d, samples, seed, coeff_bound, tuple(sorted(counts.items())))
