"""Exact dense linear algebra over the rationals.

Every dimension computed by the package goes through this module. Entries are
:class:`fractions.Fraction`, so rank, kernels and membership tests are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple  # tuple of Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be non-negative")
        entries = tuple(_frac(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> RationalMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> RationalMatrix:
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns),
                   tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, idx) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix.from_columns(self.to_rows(), rows=self.cols)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            return compose(self, other)
        return apply(self, other)


def apply(m: RationalMatrix, v: Sequence) -> Vector:
    """Matrix-vector product ``m @ v``."""
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} does not fit {m.rows}x{m.cols}")
    v = [_frac(x) for x in v]
    return tuple(sum((a * b for a, b in zip(m.row(i), v)), Fraction(0))
                 for i in range(m.rows))


def compose(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Matrix of the linear map ``a o b``."""
    if a.cols != b.rows:
        raise ValueError(f"cannot compose {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    bcols = [b.column(j) for j in range(b.cols)]
    return RationalMatrix(a.rows, b.cols, tuple(
        sum((x * y for x, y in zip(a.row(i), bc)), Fraction(0))
        for i in range(a.rows) for bc in bcols))


def rref(m: RationalMatrix):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` holds only the nonzero rows of
    the echelon form and ``pivots[i]`` is the pivot column of ``rows[i]``.
    """
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def det(m: RationalMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = m.to_rows()
    n = m.rows
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RationalMatrix) -> list:
    """Basis of the right kernel, one vector per free column.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other
    free columns, and is determined by the echelon form elsewhere. The output
    is therefore canonical for the row space of ``m``.
    """
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    return basis


def solve_membership(v: Sequence, basis: Sequence[Sequence]) -> Optional[tuple]:
    """Coefficients ``c`` with ``sum(c[i] * basis[i]) == v``, or None.

    When ``basis`` is linearly dependent the coefficients of redundant vectors
    are set to zero.
    """
    n = len(v)
    if any(len(b) != n for b in basis):
        raise ValueError("vectors in membership test have different lengths")
    aug = RationalMatrix.from_columns(list(basis) + [list(v)], rows=n)
    rows, pivots = rref(aug)
    k = len(basis)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for r, p in zip(rows, pivots):
        coeffs[p] = r[k]
    return tuple(coeffs)


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    return solve_membership(v, basis) is not None


def span_rank(vectors: Iterable[Sequence], length: int) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return rank(RationalMatrix.from_rows(vectors, cols=length))


def same_span(a: Sequence[Sequence], b: Sequence[Sequence], length: int) -> bool:
    """True when the two families span the same subspace of Q^length."""
    if any(len(v) != length for v in list(a) + list(b)):
        raise ValueError("vectors in span comparison have different lengths")
    return all(in_span(v, b) for v in a) and all(in_span(v, a) for v in b)
