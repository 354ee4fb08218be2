"""Range analysis for irrational parameters.

The central family is alpha(t) = (1 + sqrt(1 + 4t))/2, the positive root of
x^2 - x - t = 0 (t = 1 gives the golden ratio).  Ranges of f for irrational
parameters are infinite objects; everything here reports *observed* ranges
over an explicit scan prefix [[1, N]] and never claims equality with the
true range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .enclosure import Enclosure, floor_enclosure, get_constant
from .exact import QuadExt, as_alg, floor_linear, rational_between
from .evaluate import f_eval, f_eval_real

CONSTANT_NAMES = ("pi", "e")


class RationalAlpha(ValueError):
    """An operation that needs an irrational parameter got a rational one."""


class RationalDegenerate(ValueError):
    """alpha(t) is rational for this t (1 + 4t is a perfect square)."""


class PerfectSquare(ValueError):
    """k*n is a perfect square, so sqrt(k/n) is rational."""


@dataclass(frozen=True)
class GoldenParam:
    """t together with alpha(t) = (1 + sqrt(1 + 4t))/2."""

    t: int
    alpha: QuadExt


@dataclass
class RangeReport:
    alpha: str
    scan_bound: int
    observed: tuple[int, ...]
    witnesses: dict[int, int]
    classification: str
    note: str = ""

    def record_lines(self) -> list[str]:
        obs = "{" + ",".join(map(str, self.observed)) + "}"
        wit = " ".join(f"{v}->{n}" for v, n in sorted(self.witnesses.items()))
        line = (f"alpha={self.alpha} N={self.scan_bound} observed={obs} "
                f"class={self.classification} witnesses=[{wit}]")
        return [line if not self.note else line + f" note={self.note}"]


@dataclass
class WitnessReport:
    alpha: str
    scan_bound: int
    target: tuple[int, ...]
    witnesses: dict[int, int]
    missing: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return not self.missing


@dataclass
class BoundCheckReport:
    alpha: str
    scan_bound: int
    checked: int
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class NeighborhoodReport:
    k: int
    n: int
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def alpha_t(t: int) -> GoldenParam:
    """The generalized golden ratio for t, rejecting the rational cases."""
    if t < 1:
        raise ValueError("t must be positive")
    disc = 1 + 4 * t
    s = math.isqrt(disc)
    if s * s == disc:
        raise RationalDegenerate(
            f"t={t} gives a rational parameter (1+4t = {s}^2)"
        )
    alpha = QuadExt(1, 1, disc, 2)
    assert alpha * alpha - alpha == t, "defining identity alpha^2 - alpha = t"
    return GoldenParam(t=t, alpha=alpha)


def _scan_witnesses(alpha: QuadExt, n_max: int) -> dict[int, int]:
    """Smallest witness n <= n_max for every observed value of f."""
    witnesses: dict[int, int] = {}
    p, q, d, r = alpha.p, alpha.q, alpha.d, alpha.r
    if q > 0:
        # integer-only inner loop; valid for any p as long as q > 0
        isqrt = math.isqrt
        p2 = p * p + q * q * d
        q2 = 2 * p * q
        r2 = r * r
        qqd = q * q * d
        q2qd = q2 * q2 * d
        for n in range(1, n_max + 1):
            m = (p * n + isqrt(qqd * n * n)) // r
            t1 = (p2 * n + isqrt(q2qd * n * n)) // r2
            t2 = (p * m + isqrt(qqd * m * m)) // r
            v = t1 - t2
            if v not in witnesses:
                witnesses[v] = n
    else:
        for n in range(1, n_max + 1):
            v = f_eval(alpha, n)
            if v not in witnesses:
                witnesses[v] = n
    return witnesses


def classify(observed, alpha) -> str:
    """Match an observed value set against the four candidate shapes
    [[1,fl]], [[0,fl]], [[1,ce]], [[0,ce]]; 'other' when none fits."""
    alpha = as_alg(alpha)
    fl = math.floor(alpha)
    ce = math.ceil(alpha)
    observed = frozenset(observed)
    candidates = (
        ("A", frozenset(range(1, fl + 1))),
        ("B", frozenset(range(0, fl + 1))),
        ("C", frozenset(range(1, ce + 1))),
        ("D", frozenset(range(0, ce + 1))),
    )
    for letter, cand in candidates:
        if observed == cand:
            return letter
    return "other"


def observed_range(alpha, n_max: int) -> RangeReport:
    """Observed values of f over [[1, N]] with smallest witnesses and a
    quadruplicity classification.  A prefix scan only: the observed set is
    a subset of the true range, never claimed equal."""
    if n_max < 1:
        raise ValueError("scan bound must be positive")
    if isinstance(alpha, str):
        if alpha not in CONSTANT_NAMES:
            raise ValueError(f"unknown constant {alpha!r}")
        c = get_constant(alpha)
        witnesses: dict[int, int] = {}
        for n in range(1, n_max + 1):
            v = f_eval_real(c, n)
            if v not in witnesses:
                witnesses[v] = n
        fl = floor_enclosure(c, 1, 1)
        observed = tuple(sorted(witnesses))
        cls = _classify_floor_ceil(frozenset(witnesses), fl, fl + 1)
        return RangeReport(alpha=alpha, scan_bound=n_max, observed=observed,
                           witnesses=witnesses, classification=cls,
                           note=f"certified at {c.max_depth} stored digits")
    alpha = as_alg(alpha)
    if alpha.sign() <= 0:
        raise ValueError("parameter must be positive")
    witnesses = _scan_witnesses(alpha, n_max)
    observed = tuple(sorted(witnesses))
    return RangeReport(alpha=str(alpha), scan_bound=n_max, observed=observed,
                       witnesses=witnesses,
                       classification=classify(observed, alpha))


def _classify_floor_ceil(observed: frozenset, fl: int, ce: int) -> str:
    for letter, cand in (
        ("A", frozenset(range(1, fl + 1))),
        ("B", frozenset(range(0, fl + 1))),
        ("C", frozenset(range(1, ce + 1))),
        ("D", frozenset(range(0, ce + 1))),
    ):
        if observed == cand:
            return letter
    return "other"


def fractional_window_witness(alpha, lo, hi, n_max: int) -> int | None:
    """Smallest n <= N with lo < frac(alpha*n) < hi, or None.

    Density of the fractional parts guarantees a witness exists for some
    n, but not within any effective bound, hence the explicit scan cap.
    """
    alpha = as_alg(alpha)
    if alpha.is_rational:
        raise RationalAlpha("window witness needs an irrational parameter")
    lo = as_alg(lo)
    hi = as_alg(hi)
    if not (QuadExt(0) <= lo and lo < hi and hi <= QuadExt(1)):
        raise ValueError("need 0 <= lo < hi <= 1")
    for n in range(1, n_max + 1):
        fr = (alpha * n).frac()
        if lo < fr and fr < hi:
            return n
    return None


def full_range_witnesses(g: GoldenParam, n_max: int) -> WitnessReport:
    """Smallest witness for every m in [[1, floor(alpha(t))]], scanning
    n <= N."""
    fl = math.floor(g.alpha)
    witnesses = _scan_witnesses(g.alpha, n_max)
    target = tuple(range(1, fl + 1))
    found = {m: witnesses[m] for m in target if m in witnesses}
    missing = tuple(m for m in target if m not in witnesses)
    return WitnessReport(alpha=str(g.alpha), scan_bound=n_max, target=target,
                         witnesses=found, missing=missing)


def scaled_bound_check(p: int, t: int, n_max: int) -> BoundCheckReport:
    """Checks 1 <= f(n) <= floor(p*alpha(t)) and the strict sandwich
    (beta-p)*frac(beta*n) < f(n) < p + (beta-p)*frac(beta*n) for n <= N."""
    if p < 1:
        raise ValueError("p must be positive")
    beta = p * alpha_t(t).alpha
    fl = math.floor(beta)
    report = BoundCheckReport(alpha=str(beta), scan_bound=n_max, checked=0)
    for n in range(1, n_max + 1):
        f = f_eval(beta, n)
        report.checked += 1
        low = (beta - p) * (beta * n).frac()
        if not (1 <= f <= fl and low < f and f < p + low):
            report.violations.append((n, f))
    return report


def eps_kn(k: int, n: int) -> QuadExt:
    """Radius of the right-neighborhood of sqrt(k/n) on which f(n) = 1:
    (1/n) * min(ceil(sqrt(kn)) - sqrt(kn), sqrt(kn) - floor(sqrt(kn)))."""
    if not k < n:
        raise ValueError(f"need k < n, got k={k}, n={n}")
    if k < 1:
        raise ValueError("k must be positive")
    kn = k * n
    s = math.isqrt(kn)
    if s * s == kn:
        raise PerfectSquare(f"k*n = {kn} is a perfect square")
    root = QuadExt(0, 1, kn, 1)
    # ceil - root < root - floor  <=>  2s+1 < 2*sqrt(kn)
    if (2 * s + 1) ** 2 < 4 * kn:
        m = (s + 1) - root
    else:
        m = root - s
    return m / n


def sqrt_neighborhood_check(k: int, n: int, samples: int) -> NeighborhoodReport:
    """Verifies f(n) = 1 at sqrt(k/n) and at `samples` rational offsets
    inside [sqrt(k/n), sqrt(k/n) + eps).  Offsets are rational so every
    evaluation point stays inside Q(sqrt(kn))."""
    if samples < 1:
        raise ValueError("samples must be positive")
    base = QuadExt.sqrt_rational(k, n)
    eps = eps_kn(k, n)
    report = NeighborhoodReport(k=k, n=n, checked=0)
    v = f_eval(base, n)
    report.checked += 1
    if v != 1:
        report.failures.append(f"f at sqrt({k}/{n}) = {v}")
    r_eps = rational_between(0, eps)
    for j in range(1, samples + 1):
        x = r_eps * Fraction(j, samples + 1)
        v = f_eval(base + x, n)
        report.checked += 1
        if v != 1:
            report.failures.append(f"f at sqrt({k}/{n})+{x} = {v}")
    return report


def conjecture43_check(alpha, n_max: int) -> WitnessReport:
    """Which m in [[1, floor(alpha)]] are witnessed within n <= N.

    Missing values are evidence of an insufficient scan bound, never a
    refutation: the density argument carries no effective bound."""
    alpha = as_alg(alpha)
    if alpha.is_rational:
        raise RationalAlpha("conjecture scan needs an irrational parameter")
    fl = math.floor(alpha)
    witnesses = _scan_witnesses(alpha, n_max)
    target = tuple(range(1, fl + 1))
    found = {m: witnesses[m] for m in target if m in witnesses}
    missing = tuple(m for m in target if m not in witnesses)
    return WitnessReport(alpha=str(alpha), scan_bound=n_max, target=target,
                         witnesses=found, missing=missing)


def conjecture47_scan(family, n_max: int) -> list[QuadExt]:
    """Members of the family whose observed range over [[1, N]] is exactly
    {1}.  The golden ratio survives any N; survivors are candidates only."""
    survivors = []
    for alpha in family:
        alpha = as_alg(alpha)
        if alpha.is_rational:
            raise RationalAlpha("conjecture scan needs irrational parameters")
        witnesses = _scan_witnesses(alpha, n_max)
        if set(witnesses) == {1}:
            survivors.append(alpha)
    return survivors
