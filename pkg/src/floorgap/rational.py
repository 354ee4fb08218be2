"""Exact range analysis for rational parameters a/b.

The range of f for a rational parameter is finite and computable: values
repeat with period b^2, so the whole range is {0} together with the values
on [[1, b^2 - 1]].  On top of the brute-force range this module provides
the closed-form predictions (denominators 2 and 3, the 1/b families),
closed-form single-point oracles, Bezout witnesses, and the conjecture
sweep for parameters of the form s*b - a/b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .evaluate import f_eval, phi


class NotCoprime(ValueError):
    pass


class IntegerParameter(ValueError):
    pass


@dataclass(frozen=True)
class RationalParam:
    """A supra- or sub-unitary parameter a/b written as s*b + u + a_frac/b."""

    a: int
    b: int
    s: int
    u: int
    a_frac: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.b)

    def whole(self) -> int:
        """The integer part s*b + u."""
        return self.s * self.b + self.u


@dataclass
class RangeSet:
    """A computed exact range together with the smallest witness for
    each value."""

    values: tuple[int, ...]
    witnesses: dict[int, int] = field(default_factory=dict)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.values)


@dataclass
class SweepReport:
    grid: str
    checked_count: int
    counterexamples: list[tuple[tuple[int, int, int], frozenset, frozenset]]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def record_lines(self) -> list[str]:
        lines = [f"# sweep {self.grid} checked={self.checked_count} "
                 f"counterexamples={len(self.counterexamples)}"]
        for (b, a, s), predicted, computed in self.counterexamples:
            lines.append(
                f"b={b} a={a} s={s} predicted={format_set(predicted)} "
                f"computed={format_set(computed)}"
            )
        return lines


def format_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _scaled_block(s: int, lo: int, hi: int) -> set[int]:
    """The set s*[[lo, hi]] (note s = 0 collapses to {0})."""
    return {s * x for x in range(lo, hi + 1)}


def decompose_param(a: int, b: int) -> RationalParam:
    """Unique (s, u, a_frac) with a/b = s*b + u + a_frac/b."""
    if b < 2:
        raise ValueError("b must be at least 2")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"{a}/{b} is not reduced")
    if a % b == 0:
        raise IntegerParameter(f"{a}/{b} is an integer")
    whole, a_frac = divmod(a, b)
    s, u = divmod(whole, b)
    return RationalParam(a=a, b=b, s=s, u=u, a_frac=a_frac)


def range_rational(a: int, b: int) -> RangeSet:
    """Exact Range(f_{a/b}) by scanning one period [[1, b^2 - 1]]."""
    if b < 2:
        raise ValueError("b must be at least 2")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"{a}/{b} is not reduced")
    witnesses: dict[int, int] = {}
    b2 = b * b
    a2 = a * a
    for n in range(1, b2):
        v = (a2 * n) // b2 - (a * ((a * n) // b)) // b
        if v not in witnesses:
            witnesses[v] = n
    witnesses.setdefault(0, b)
    return RangeSet(values=tuple(sorted(witnesses)), witnesses=witnesses)


def predicted_range(a: int, b: int) -> frozenset[int] | None:
    """The closed-form range when a/b falls in a solved family, else None.

    Families: the sub-unitary dichotomy; all denominator-2 and
    denominator-3 parameters; and the a_frac = 1 parameters with
    u in {0, 1, b-1}.  When several families overlap their predictions
    are cross-asserted equal before returning.
    """
    param = decompose_param(a, b)
    s, u, af = param.s, param.u, param.a_frac
    predictions: list[set[int]] = []

    if a < b:
        predictions.append({0} if a == 1 else {0, 1})

    if b == 2:
        # af = 1 forced; u = 0 -> {0, s}; u = 1 -> {0, s, s+1}
        if u == 0 and s >= 1:
            predictions.append({0, s})
        elif u == 1:
            predictions.append({0, s, s + 1})
    elif b == 3:
        if u == 0 and af == 1 and s >= 1:
            predictions.append({0, s, 2 * s})
        elif u == 0 and af == 2 and s >= 1:
            predictions.append({0, s, 2 * s, 2 * s + 1})
        elif u == 1 and af == 1:
            predictions.append({0, s, s + 1, 2 * s, 2 * s + 1})
        elif u == 1 and af == 2:
            predictions.append({0, s, s + 1, 2 * s + 1})
        elif u == 2 and af == 1:
            predictions.append({0, s, s + 1, 2 * s + 1, 2 * s + 2})
        elif u == 2 and af == 2:
            predictions.append({0, s, s + 1, 2 * s + 1, 2 * s + 2})

    if af == 1 and u == 0 and s >= 1:
        predictions.append(_scaled_block(s, 0, b - 1))
    if af == 1 and u == 1:
        predictions.append(
            _scaled_block(s, 0, b - 1)
            | {v + 1 for v in _scaled_block(s, 1, b - 1)}
        )
    if af == 1 and u == b - 1:
        sp = s + 1
        predictions.append(
            _scaled_block(sp, 0, b - 1)
            | {v - 1 for v in _scaled_block(sp, 1, b - 1)}
        )

    if not predictions:
        return None
    first = predictions[0]
    for other in predictions[1:]:
        if other != first:
            raise AssertionError(
                f"inconsistent closed forms for {a}/{b}: {predictions}"
            )
    return frozenset(first)


def closed_form_eval(param: RationalParam, n: int) -> int:
    """Single-point closed form for f at n inside one period.

    With n = b*t + r (t, r in [[0, b-1]]), a = a_frac:

        f(n) = s*a*r - (s*b + u)*floor(a*r/b)
               + floor(2*u*a*r/b + a^2*t/b + a^2*r/b^2)
               - floor(u*a*r/b + a^2*t/b + (a/b)*floor(a*r/b))
    """
    b, s, u, a = param.b, param.s, param.u, param.a_frac
    if not 0 <= n < b * b:
        raise ValueError(f"n={n} outside the period window [[0, {b*b - 1}]]")
    t, r = divmod(n, b)
    k = (a * r) // b
    term3 = (2 * u * a * r * b + a * a * t * b + a * a * r) // (b * b)
    term4 = (u * a * r * b + a * a * t * b + a * k * b) // (b * b)
    return s * a * r - (s * b + u) * k + term3 - term4


def decomposition_identity_check(param: RationalParam, n: int) -> tuple[int, int]:
    """Both sides of f_{sb+u+a/b} = s*phi_{a,b} + f_{u+a/b} at n."""
    if n < 1:
        raise ValueError("n must be positive")
    b, s, u, a = param.b, param.s, param.u, param.a_frac
    lhs = f_eval(Fraction(param.a, b), n)
    rhs = s * phi(a, b, n) + f_eval(Fraction(u * b + a, b), n)
    return lhs, rhs


def bezout_witness(a: int, b: int) -> int:
    """Smallest n > 0 with a^2 n = 1 (mod b^2); guarantees f_{a/b}(n) = 1."""
    if not (1 < a < b):
        raise ValueError(f"need 1 < a < b, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"a={a}, b={b} must be coprime")
    return pow(a * a, -1, b * b)


def lemma33_probe(a: int, b: int) -> tuple[bool, bool]:
    """Enumerates (x, y) -> a*x + b*y on [[0, b-1]]^2.

    Returns (injective, covers) where covers means the image contains
    all of [[0, b^2 - 1]]; covers holds exactly when a = 1.
    """
    if not (0 < a < b) or math.gcd(a, b) != 1:
        raise ValueError("need coprime a < b")
    seen: set[int] = set()
    injective = True
    for x in range(b):
        for y in range(b):
            v = a * x + b * y
            if v in seen:
                injective = False
            seen.add(v)
    covers = all(v in seen for v in range(b * b))
    return injective, covers


def conjectured_range_sb_minus(b: int, a: int, s: int) -> frozenset[int]:
    """The conjectured Range(f_{sb - a/b}) as explicit set arithmetic."""
    return frozenset(
        _scaled_block(s, 0, b - 1)
        | {v - 1 for v in _scaled_block(s, 1, b - 1)}
    )


def conjecture317_sweep(b_max: int, s_max: int) -> SweepReport:
    """Compare brute-force ranges of f_{sb - a/b} against the conjectured
    closed form over the whole grid.  Reports evidence, never proof.
    """
    if b_max < 2 or s_max < 1:
        raise ValueError("need b_max >= 2 and s_max >= 1")
    checked = 0
    counterexamples = []
    for b in range(2, b_max + 1):
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            for s in range(1, s_max + 1):
                num = s * b * b - a  # s*b - a/b = (s b^2 - a)/b > 0 always
                computed = range_rational(num, b).as_set()
                predicted = conjectured_range_sb_minus(b, a, s)
                checked += 1
                if computed != predicted:
                    counterexamples.append(((b, a, s), predicted, computed))
    return SweepReport(
        grid=f"sb-a/b for b<={b_max}, s<={s_max}",
        checked_count=checked,
        counterexamples=counterexamples,
    )
