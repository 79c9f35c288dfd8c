"""Binary forms with exact rational coefficients.

A form of degree ``l`` stores ``coeffs[k]`` = coefficient of ``X0^k X1^(l-k)``.
The same class is used for polynomials in the dual variables ``xi0, xi1``;
only the rendering differs.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .linalg import RationalMatrix, _frac, det

X_NAMES = ("X0", "X1")
XI_NAMES = ("xi0", "xi1")


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative degree {self.degree}")
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, degree: int) -> BinaryForm:
        return cls(degree, (0,) * (degree + 1))

    @classmethod
    def constant(cls, c) -> BinaryForm:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, e0: int, e1: int, coeff=1) -> BinaryForm:
        """``coeff * X0^e0 * X1^e1``."""
        c = [0] * (e0 + e1 + 1)
        c[e0] = coeff
        return cls(e0 + e1, c)

    @classmethod
    def linear(cls, a0, a1) -> BinaryForm:
        """The linear form ``a0*X0 + a1*X1``."""
        return cls(1, (a1, a0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: BinaryForm) -> BinaryForm:
        _check_same_degree(self, other)
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        _check_same_degree(self, other)
        return BinaryForm(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BinaryForm:
        return BinaryForm(self.degree, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return multiply(self, other)
        c = _frac(other)
        return BinaryForm(self.degree, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BinaryForm:
        if n < 0:
            raise ValueError("negative exponent")
        out = BinaryForm.constant(1)
        for _ in range(n):
            out = multiply(out, self)
        return out

    def __str__(self):
        return render(self)


def _check_same_degree(p: BinaryForm, q: BinaryForm):
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


@dataclass(frozen=True)
class LinearSubstitution:
    """The substitution ``X0 -> a*X0 + b*X1, X1 -> c*X0 + d*X1``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @classmethod
    def identity(cls) -> LinearSubstitution:
        return cls(1, 0, 0, 1)

    @classmethod
    def swap(cls) -> LinearSubstitution:
        return cls(0, 1, 1, 0)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: LinearSubstitution) -> LinearSubstitution:
        return LinearSubstitution(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)


def multiply(p: BinaryForm, q: BinaryForm) -> BinaryForm:
    out = [Fraction(0)] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return BinaryForm(p.degree + q.degree, out)


def _falling(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1)"""
    return math.perm(n, k)


def apolar_apply(q: BinaryForm, p: BinaryForm) -> BinaryForm:
    """Apply ``q(d/dX0, d/dX1)`` to ``p``."""
    d, l = q.degree, p.degree
    if d > l:
        raise ValueError(f"operator degree {d} exceeds form degree {l}")
    out = [Fraction(0)] * (l - d + 1)
    for j, qj in enumerate(q.coeffs):
        if not qj:
            continue
        # xi0^j xi1^(d-j) applied to X0^k X1^(l-k)
        for k in range(j, l - d + j + 1):
            pk = p.coeffs[k]
            if pk:
                out[k - j] += qj * pk * _falling(k, j) * _falling(l - k, d - j)
    return BinaryForm(l - d, out)


def substitute(p: BinaryForm, g: LinearSubstitution) -> BinaryForm:
    """``p(a*X0 + b*X1, c*X0 + d*X1)``."""
    if g.det == 0:
        raise ValueError("singular substitution")
    new0 = BinaryForm.linear(g.a, g.b)
    new1 = BinaryForm.linear(g.c, g.d)
    l = p.degree
    out = BinaryForm.zero(l)
    pow0 = [BinaryForm.constant(1)]
    pow1 = [BinaryForm.constant(1)]
    for _ in range(l):
        pow0.append(multiply(pow0[-1], new0))
        pow1.append(multiply(pow1[-1], new1))
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + multiply(pow0[k], pow1[l - k]) * c
    return out


# -- univariate helpers: lists of Fractions, index = power of x ---------------

def _trim(f: list) -> list:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _divmod(f: list, g: list):
    f, g = _trim(f), _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    lead = g[-1]
    while len(r) >= len(g):
        c = r[-1] / lead
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] -= c * b
        r = _trim(r)
    return q, r


def _gcd(f: list, g: list) -> list:
    """Monic gcd; the empty list stands for the zero polynomial."""
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, _divmod(f, g)[1]
    if not f:
        return []
    return [c / f[-1] for c in f]


def _deriv(f: list) -> list:
    return [i * c for i, c in enumerate(f)][1:]


def dehomogenize(p: BinaryForm):
    """Split ``p = X1^e * h`` with ``X1`` not dividing ``h``; return ``(e, h(x, 1))``."""
    if p.is_zero():
        raise ValueError("zero form")
    f = _trim(p.coeffs)
    return p.degree - (len(f) - 1), f


def normalize(p: BinaryForm) -> BinaryForm:
    """Integer-primitive scalar multiple with positive leading coefficient.

    The leading coefficient is the nonzero one with the highest X0 exponent.
    """
    if p.is_zero():
        return p
    den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0)
    lead = next(c for c in reversed(ints) if c)
    if lead < 0:
        g = -g
    return BinaryForm(p.degree, [Fraction(c, g) for c in ints])


def gcd_forms(p: BinaryForm, q: BinaryForm) -> BinaryForm:
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero forms")
    if p.is_zero():
        return normalize(q)
    if q.is_zero():
        return normalize(p)
    ep, fp = dehomogenize(p)
    eq, fq = dehomogenize(q)
    g = _gcd(fp, fq)
    e = min(ep, eq)
    return normalize(BinaryForm(len(g) - 1 + e, g + [0] * e))


def partial(p: BinaryForm, var: int) -> BinaryForm:
    """Partial derivative with respect to ``X0`` (``var=0``) or ``X1`` (``var=1``)."""
    if p.degree == 0:
        raise ValueError("derivative of a constant form has no degree")
    xi = BinaryForm.monomial(1, 0) if var == 0 else BinaryForm.monomial(0, 1)
    return apolar_apply(xi, p)


def resultant(p: BinaryForm, q: BinaryForm) -> Fraction:
    """Homogeneous resultant via the Sylvester matrix of the formal degrees."""
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    for shift in range(n):
        row = [0] * size
        for k in range(m + 1):
            row[shift + k] = p.coeffs[m - k]
        rows.append(row)
    for shift in range(m):
        row = [0] * size
        for k in range(n + 1):
            row[shift + k] = q.coeffs[n - k]
        rows.append(row)
    return det(RationalMatrix.from_rows(rows))


def is_squarefree(p: BinaryForm) -> bool:
    """No repeated linear factor over the complex numbers."""
    e, f = dehomogenize(p)
    return e <= 1 and len(_gcd(f, _deriv(f))) <= 1


def is_linear_power(p: BinaryForm) -> bool:
    """True when ``p = c * lambda^l`` for a linear form ``lambda``.

    Decided from root multiplicities alone (no catalecticants): either
    ``p = c*X1^l`` or ``p(x, 1)`` has a single root of multiplicity ``l``.
    """
    e, f = dehomogenize(p)
    if e == p.degree or p.degree == 0:
        return True
    if e > 0:
        return False
    return len(_gcd(f, _deriv(f))) - 1 == p.degree - 1


# -- text syntax ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()])|(−))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")
        num, name, op, minus = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            op = "-" if minus else op
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    # polynomials are dicts {(e0, e1): Fraction}; zero entries are kept so that
    # "0*X0^3" still remembers its degree

    def __init__(self, tokens, names):
        self.tokens = tokens
        self.i = 0
        self.names = names

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}")

    def parse(self):
        poly = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input at token {self.peek()[1]!r}")
        return poly

    def expr(self):
        poly = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = self.take()[1]
            rhs = self.term()
            poly = _padd(poly, rhs if sign == "+" else _pscale(rhs, -1))
        return poly

    def term(self):
        poly = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) in (("op", "*"), ("op", "/")):
                op = self.take()[1]
            elif kind == "name" or (kind, val) == ("op", "("):
                op = "*"  # juxtaposition, as in 2X0 or X1(X0+X1)
            else:
                break
            rhs = self.unary()
            if op == "*":
                poly = _pmul(poly, rhs)
            else:
                nonzero = {k: v for k, v in rhs.items() if v}
                if list(nonzero) != [(0, 0)]:
                    raise ValueError("division is only allowed by nonzero constants")
                poly = _pscale(poly, 1 / nonzero[(0, 0)])
        return poly

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return _pscale(self.unary(), -1)
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            out = {(0, 0): Fraction(1)}
            for _ in range(val):
                out = _pmul(out, base)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return {(0, 0): Fraction(val)}
        if kind == "name":
            if val == self.names[0]:
                return {(1, 0): Fraction(1)}
            if val == self.names[1]:
                return {(0, 1): Fraction(1)}
            raise ValueError(f"unknown variable {val!r}; expected {self.names[0]} or {self.names[1]}")
        if (kind, val) == ("op", "("):
            poly = self.expr()
            self.expect_op(")")
            return poly
        raise ValueError(f"unexpected token {val!r}")


def _padd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return out


def _pscale(a, c):
    return {k: v * c for k, v in a.items()}


def _pmul(a, b):
    out = {}
    for (i, j), u in a.items():
        for (k, m), v in b.items():
            key = (i + k, j + m)
            out[key] = out.get(key, Fraction(0)) + u * v
    return out


def parse_expression(text: str, names=X_NAMES) -> BinaryForm:
    """Parse a homogeneous polynomial such as ``"X0^2*X1 - 1/2*X1^3"``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    poly = _Parser(tokens, names).parse()
    degrees = {i + j for (i, j), v in poly.items() if v}
    if len(degrees) > 1:
        raise ValueError(f"not homogeneous: terms of degrees {sorted(degrees)}")
    degree = degrees.pop() if degrees else max(i + j for i, j in poly)
    coeffs = [Fraction(0)] * (degree + 1)
    for (i, j), v in poly.items():
        if i + j == degree:
            coeffs[i] += v
    return BinaryForm(degree, coeffs)


def form_to_json(p: BinaryForm) -> dict:
    return {"degree": p.degree, "coeffs": [str(c) for c in p.coeffs]}


def form_from_json(obj) -> BinaryForm:
    if isinstance(obj, list):
        return BinaryForm(len(obj) - 1, [Fraction(str(c)) for c in obj])
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("JSON form must be an object with 'degree' and 'coeffs'")
    coeffs = [Fraction(str(c)) for c in obj["coeffs"]]
    degree = obj.get("degree", len(coeffs) - 1)
    return BinaryForm(int(degree), coeffs)


def parse_form(text: str, names=X_NAMES) -> BinaryForm:
    """Parse either the JSON coefficient syntax or an expression."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON form: {exc}") from None
        return form_from_json(obj)
    return parse_expression(stripped, names)


def _monomial_str(e0, e1, names):
    parts = []
    for name, e in zip(names, (e0, e1)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p: BinaryForm, names=X_NAMES) -> str:
    """Expression string; ``parse_form(render(p)) == p`` for every form."""
    if p.is_zero():
        return "0" if p.degree == 0 else f"0*{names[0]}^{p.degree}"
    out = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = _monomial_str(k, p.degree - k, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)
