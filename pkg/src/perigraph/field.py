"""Exact scalars: rationals and real quadratic extensions Q(sqrt(d)).

All geometric predicates in this package are evaluated over these types;
no floating point enters any decision.  A scalar is either a
:class:`fractions.Fraction` (or int) or a :class:`QuadExt` value
``a + b*sqrt(d)`` with rational ``a``, ``b`` and a fixed positive
non-square ``d``.  Mixed arithmetic with rationals is supported.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = (int, Fraction)


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


class QuadExt:
    """``a + b*sqrt(d)`` with a, b rational and d a positive non-square int."""

    __slots__ = ("a", "b", "d")

    def __init__(self, d: int, a, b=0):
        if d <= 0 or _is_square(d):
            raise ValueError(f"d must be a positive non-square, got {d}")
        object.__setattr__  # no frozen dataclass; plain slots
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    # -- coercion ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d and other.b != 0 and self.b != 0:
                raise ValueError(f"incompatible radicands {self.d} and {other.d}")
            d = self.d if self.b != 0 or other.b == 0 else other.d
            return QuadExt(d, self.a, self.b), QuadExt(d, other.a, other.b)
        if isinstance(other, Rational):
            return self, QuadExt(self.d, other)
        return NotImplemented, None

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        s, o = self._coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return QuadExt(s.d, s.a + o.a, s.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.d, -self.a, -self.b)

    def __sub__(self, other):
        s, o = self._coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return QuadExt(s.d, s.a - o.a, s.b - o.b)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        s, o = self._coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return QuadExt(s.d, s.a * o.a + s.b * o.b * s.d, s.a * o.b + s.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic scalar")
        return QuadExt(self.d, self.a / n, -self.b / n)

    def __truediv__(self, other):
        s, o = self._coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return s * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparisons ---------------------------------------------------
    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * self.d
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def _cmp(self, other):
        s, o = self._coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return (s - o).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadExt({self.d}, {self.a!r}, {self.b!r})"

    def __str__(self):
        return format_scalar(self)


def scalar_sign(x) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def exact_floor(x) -> int:
    """Floor of an exact scalar, computed without floating point decisions."""
    if isinstance(x, Rational):
        return math.floor(Fraction(x))
    if not isinstance(x, QuadExt):
        raise TypeError(type(x))
    if x.b == 0:
        return math.floor(x.a)
    # floor(a) + floor(b*sqrt(d)) is within 1 of the answer; adjust exactly.
    guess = math.floor(float(x))
    for k in (guess - 1, guess, guess + 1):
        if (x - k).sign() >= 0 and (x - (k + 1)).sign() < 0:
            return k
    raise AssertionError("float seed off by more than one")


def exact_ceil(x) -> int:
    return -exact_floor(-x if isinstance(x, QuadExt) else -Fraction(x))


# -- parsing and formatting -------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^\s*(?P<a>{_RAT})\s*(?:(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)
_QUAD_ONLY_RE = re.compile(
    rf"^\s*(?P<b>{_RAT})\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)\s*$"
)


def parse_scalar(text: str):
    """Parse ``p/q`` or ``p/q+r/s*sqrt(d)`` (also ``r/s*sqrt(d)``)."""
    m = _QUAD_ONLY_RE.match(text)
    if m:
        return QuadExt(int(m.group("d")), 0, Fraction(m.group("b")))
    m = _QUAD_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse scalar literal {text!r}")
    a = Fraction(m.group("a"))
    if m.group("b") is None:
        return a
    b = Fraction(m.group("b"))
    if m.group("sign") == "-":
        b = -b
    return QuadExt(int(m.group("d")), a, b)


def format_scalar(x) -> str:
    if isinstance(x, Rational):
        return str(Fraction(x))
    if isinstance(x, QuadExt):
        if x.b == 0:
            return str(x.a)
        sign = "+" if x.b > 0 else "-"
        b = abs(x.b)
        return f"{x.a}{sign}{b}*sqrt({x.d})"
    raise TypeError(type(x))


def to_float(x) -> float:
    return float(x)


# -- exact linear algebra ---------------------------------------------

def solve_linear(rows, rhs):
    """Solve A x = b exactly; return a solution list or None if inconsistent.

    Works over any field of scalars supported above.  Free variables are
    set to 0.  ``rows`` is a list of coefficient rows.
    """
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    nrows = len(m)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if scalar_sign(m[i][c]) != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv_coeff = m[r][c]
        m[r] = [v / inv_coeff for v in m[r]]
        for i in range(nrows):
            if i != r and scalar_sign(m[i][c]) != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if scalar_sign(m[i][ncols]) != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x


def matrix_rank(rows) -> int:
    m = [list(r) for r in rows]
    nrows, ncols = len(m), (len(m[0]) if m else 0)
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if scalar_sign(m[i][c]) != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, nrows):
            if scalar_sign(m[i][c]) != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def det(rows):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if scalar_sign(m[i][c]) != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        result = result * m[c][c]
        inv = m[c][c]
        for i in range(c + 1, n):
            if scalar_sign(m[i][c]) != 0:
                f = m[i][c] / inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result * sign
