"""Exact arithmetic over Q and over real quadratic extensions Q(sqrt(d)).

The one scalar type exported here is :class:`QuadExt`, a canonical
representation of (p + q*sqrt(d))/r with arbitrary-precision integer
components.  Rationals are embedded canonically as q = 0, d = 1, so a single
class plays the role of "any exactly representable parameter" in the rest of
the package.  All values are immutable and every operation is a pure
function, so they can be used freely from concurrent workers.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational


class IncompatibleRadicands(ValueError):
    """Arithmetic between two distinct irrational radicands was requested."""


class EmptyInterval(ValueError):
    """rational_between was called with lo >= hi."""


def isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer."""
    if n < 0:
        raise ValueError("isqrt of negative integer")
    return math.isqrt(n)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = s*s*d with d squarefree; returns (s, d).

    Trial division only -- every radicand used in this package is
    desk-scale (at most a few tens of thousands).
    """
    if n < 1:
        raise ValueError("squarefree_decompose needs a positive integer")
    s = 1
    d = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return s, d


def floor_linear(a: int, b: int, d: int, r: int) -> int:
    """Exact floor of (a + b*sqrt(d))/r for integers with r > 0, d >= 0.

    Uses only integer square roots: with s = floor(b*sqrt(d)), the floor is
    (a + s) // r (the fractional part of b*sqrt(d) can never push the
    quotient past the next integer).
    """
    if b == 0:
        return a // r
    t = b * b * d
    s = math.isqrt(t)
    if b > 0:
        sb = s
    else:
        sb = -s if s * s == t else -s - 1
    return (a + sb) // r


class QuadExt:
    """Canonical (p + q*sqrt(d))/r with r > 0, gcd(|p|,|q|,r) = 1.

    Invariants: if q != 0 then d is squarefree and > 1; if q == 0 then
    d == 1.  The value is rational exactly when q == 0, so equality of
    values coincides with equality of representations.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 1, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("zero denominator in QuadExt")
        if d < 0:
            raise ValueError("negative radicand")
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0 or d == 0:
            q, d = 0, 1
        else:
            s, d0 = squarefree_decompose(d)
            q *= s
            d = d0
            if d == 1:
                p += q
                q = 0
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        if g > 1:
            p //= g
            q //= g
            r //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, num, den: int = 1) -> "QuadExt":
        if isinstance(num, Rational) and den == 1:
            return cls(num.numerator, 0, 1, num.denominator)
        return cls(num, 0, 1, den)

    @classmethod
    def sqrt_rational(cls, k: int, n: int) -> "QuadExt":
        """The positive square root of k/n (k, n > 0)."""
        if k <= 0 or n <= 0:
            raise ValueError("sqrt_rational needs positive integers")
        # sqrt(k/n) = sqrt(k*n)/n
        return cls(0, 1, k * n, n)

    # -- predicates / conversions -------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def is_integer(self) -> bool:
        return self.q == 0 and self.r == 1

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def approx_interval(self, digits: int) -> tuple[Fraction, Fraction]:
        """A rational interval [lo, hi] containing the value, of width
        at most 2*|q|/(r*10^digits)."""
        if self.q == 0:
            f = Fraction(self.p, self.r)
            return f, f
        scale = 10 ** digits
        s = math.isqrt(self.d * scale * scale)
        # s/scale <= sqrt(d) <= (s+1)/scale
        if self.q > 0:
            lo = Fraction(self.p * scale + self.q * s, self.r * scale)
            hi = Fraction(self.p * scale + self.q * (s + 1), self.r * scale)
        else:
            lo = Fraction(self.p * scale + self.q * (s + 1), self.r * scale)
            hi = Fraction(self.p * scale + self.q * s, self.r * scale)
        return lo, hi

    # -- ordering ------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the value (-1, 0, 1)."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 against q^2*d (never equal, d squarefree > 1)
        if p > 0:
            return 1 if p * p > q * q * d else -1
        return -1 if p * p > q * q * d else 1

    def _cmp(self, other: "QuadExt") -> int:
        if self.d == other.d or self.q == 0 or other.q == 0:
            diff = QuadExt(
                self.p * other.r - other.p * self.r,
                self.q * other.r - other.q * self.r,
                self.d if self.q != 0 else other.d,
                self.r * other.r,
            )
            return diff.sign()
        # distinct radicands.  The difference A + B*sqrt(d1) + C*sqrt(d2)
        # with B, C != 0 and d1 != d2 squarefree > 1 can only vanish when
        # A = B = C = 0 (Q-linear independence of 1, sqrt(d1), sqrt(d2)),
        # which is impossible here; so interval refinement terminates.
        digits = 20
        while True:
            lo1, hi1 = self.approx_interval(digits)
            lo2, hi2 = other.approx_interval(digits)
            if hi1 < lo2:
                return -1
            if hi2 < lo1:
                return 1
            digits *= 2

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.p, self.q, self.d, self.r) == (other.p, other.q, other.d, other.r)

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    # -- arithmetic ----------------------------------------------------

    def _common_d(self, other: "QuadExt") -> int:
        if self.q == 0:
            return other.d
        if other.q == 0:
            return self.d
        if self.d != other.d:
            raise IncompatibleRadicands(
                f"sqrt({self.d}) and sqrt({other.d}) do not mix"
            )
        return self.d

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadExt(
            self.p * other.r + other.p * self.r,
            self.q * other.r + other.q * self.r,
            d,
            self.r * other.r,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadExt(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
            self.r * other.r,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        if self.sign() == 0:
            raise ZeroDivisionError("inverse of zero")
        # r/(p + q*sqrt(d)) = r*(p - q*sqrt(d))/(p^2 - q^2 d)
        norm = self.p * self.p - self.q * self.q * self.d
        return QuadExt(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)  # check radicands before inverting
        del d
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    # -- floor family ----------------------------------------------------

    def __floor__(self) -> int:
        return floor_linear(self.p, self.q, self.d, self.r)

    def __ceil__(self) -> int:
        return -floor_linear(-self.p, -self.q, self.d, self.r)

    def frac(self) -> "QuadExt":
        return self - self.__floor__()

    # -- text form -------------------------------------------------------

    def __str__(self) -> str:
        if self.q == 0:
            return f"{self.p}/{self.r}"
        op = "+" if self.q >= 0 else "-"
        return f"({self.p}{op}{abs(self.q)}*sqrt({self.d}))/{self.r}"

    def __repr__(self) -> str:
        return f"QuadExt({self.p}, {self.q}, {self.d}, {self.r})"


def _coerce(x):
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, int):
        return QuadExt(x)
    if isinstance(x, Rational):
        return QuadExt(x.numerator, 0, 1, x.denominator)
    return NotImplemented


def as_alg(x) -> QuadExt:
    """Coerce an int, Fraction or QuadExt to QuadExt."""
    v = _coerce(x)
    if v is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact algebraic number")
    return v


def normalize_quad(p: int, q: int, d: int, r: int) -> QuadExt:
    """Canonical QuadExt equal to (p + q*sqrt(d))/r."""
    return QuadExt(p, q, d, r)


def cmp(x, y) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    return as_alg(x)._cmp(as_alg(y))


def floor_alg(x) -> int:
    return as_alg(x).__floor__()


def ceil_alg(x) -> int:
    return as_alg(x).__ceil__()


def frac_alg(x) -> QuadExt:
    return as_alg(x).frac()


_QUAD_RE = re.compile(
    r"^\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(-?\d+)$"
)
_RAT_RE = re.compile(r"^(-?\d+)\s*(?:/\s*(-?\d+))?$")


def parse_alg(text: str) -> QuadExt:
    """Parse the canonical serialization: `p/r` or `(p+q*sqrt(d))/r`."""
    text = text.strip()
    m = _QUAD_RE.match(text)
    if m:
        p, sgn, q, d, r = m.groups()
        q = int(q) if sgn == "+" else -int(q)
        return QuadExt(int(p), q, int(d), int(r))
    m = _RAT_RE.match(text)
    if m:
        num, den = m.groups()
        return QuadExt(int(num), 0, 1, int(den) if den else 1)
    raise ValueError(f"cannot parse algebraic number: {text!r}")


def rational_between(x, y) -> Fraction:
    """The smallest-denominator rational strictly between x and y.

    Stern-Brocot / continued-fraction descent driven entirely by exact
    floors and comparisons, so both endpoints may be quadratic irrationals
    (with different radicands)."""
    lo = as_alg(x)
    hi = as_alg(y)
    if not lo < hi:
        raise EmptyInterval(f"not an interval: [{lo}, {hi}]")
    return _simplest(lo, hi)


def _simplest(lo: QuadExt, hi: QuadExt | None) -> Fraction:
    # smallest-denominator rational in the open interval (lo, hi);
    # hi = None means +infinity.
    f = lo.__floor__()
    n0 = f + 1
    if hi is None or hi > n0:
        return Fraction(n0)
    # the interval lies inside (f, f+1]: recurse on reciprocals
    new_lo = (hi - f).inverse()
    new_hi = None if lo.is_integer() else (lo - f).inverse()
    z = _simplest(new_lo, new_hi)
    return f + 1 / z
