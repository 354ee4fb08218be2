"""The sets A_m = {alpha in (0,1] : f_alpha(m) = 1} as exact interval unions.

For fixed m the map alpha -> f_alpha(m) is piecewise constant on (0,1]; its
value can only change where floor(alpha*m), floor(alpha^2*m) or
floor(alpha*j) jumps for some attainable j <= m.  We enumerate a superset
of those breakpoints (all rational or quadratic-irrational, hence exactly
evaluable), evaluate f exactly at every breakpoint and at one rational
sample inside every open gap, and assemble the result.  Spurious
breakpoints cost one evaluation each and merge away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import QuadExt, as_alg, rational_between
from .evaluate import f_eval

ONE = QuadExt(1)
ZERO = QuadExt(0)


@dataclass(frozen=True)
class Interval:
    lo: QuadExt
    hi: QuadExt
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval {self}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("degenerate interval must be closed on both ends")

    def contains(self, x) -> bool:
        x = as_alg(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def width(self) -> QuadExt:
        return self.hi - self.lo

    def __str__(self) -> str:
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{self.lo},{self.hi}{rb}"

    def pretty(self, digits: int = 5) -> str:
        return (f"{self} ~ {_approx_str(self.lo, digits)}.."
                f"{_approx_str(self.hi, digits)}")


def _approx_str(x: QuadExt, digits: int) -> str:
    return f"{float(x):.{digits}g}"


@dataclass
class IntervalSet:
    """Ordered pairwise-disjoint, non-adjacent intervals over (0, 1]."""

    intervals: list[Interval] = field(default_factory=list)

    @classmethod
    def from_intervals(cls, intervals) -> "IntervalSet":
        return cls(_merge(sorted(intervals, key=_sort_key)))

    def contains(self, x) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def measure(self) -> float:
        return sum(float(iv.width()) for iv in self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.intervals == other.intervals

    def record_lines(self) -> list[str]:
        return [iv.pretty() for iv in self.intervals]


def _sort_key(iv: Interval):
    return iv.lo  # QuadExt ordering is exact and total


def _mergeable(a: Interval, b: Interval) -> bool:
    # b.lo >= a.lo; overlap or touch with at least one closed side
    if b.lo < a.hi:
        return True
    if b.lo == a.hi and (a.hi_closed or b.lo_closed):
        return True
    return False


def _merge(sorted_intervals: list[Interval]) -> list[Interval]:
    out: list[Interval] = []
    for iv in sorted_intervals:
        if out and _mergeable(out[-1], iv):
            last = out[-1]
            if iv.hi > last.hi:
                hi, hi_closed = iv.hi, iv.hi_closed
            elif iv.hi == last.hi:
                hi, hi_closed = last.hi, last.hi_closed or iv.hi_closed
            else:
                hi, hi_closed = last.hi, last.hi_closed
            lo_closed = last.lo_closed or (iv.lo == last.lo and iv.lo_closed)
            out[-1] = Interval(last.lo, hi, lo_closed, hi_closed)
        else:
            out.append(iv)
    return out


def breakpoints(m: int) -> list[QuadExt]:
    """Sorted candidate discontinuities of alpha -> f_alpha(m) in (0, 1]:
    all j/m, all sqrt(k/m), and all i/j with j <= m."""
    if m < 2:
        raise ValueError("m must be at least 2")
    cands: set[QuadExt] = set()
    for j in range(1, m + 1):
        cands.add(QuadExt(j, 0, 1, m))
    for k in range(1, m + 1):
        cands.add(QuadExt.sqrt_rational(k, m))
    for j in range(1, m + 1):
        for i in range(1, j + 1):
            cands.add(QuadExt(i, 0, 1, j))
    return sorted(cands)


def am_set(m: int) -> IntervalSet:
    """Exact A_m via breakpoint enumeration.

    Endpoint closedness is decided by exact evaluation at each breakpoint,
    never by limits.
    """
    bps = breakpoints(m)
    pieces: list[tuple[QuadExt, QuadExt, bool, bool]] = []  # value-1 pieces
    prev = ZERO
    for bp in bps:
        sample = as_alg(rational_between(prev, bp))
        if f_eval(sample, m) == 1:
            pieces.append((prev, bp, False, False))
        if f_eval(bp, m) == 1:
            pieces.append((bp, bp, True, True))
        prev = bp
    # last breakpoint is exactly 1, so the pieces tile all of (0, 1]
    intervals = [Interval(lo, hi, lc, hc) for lo, hi, lc, hc in pieces]
    return IntervalSet.from_intervals(intervals)


def union(sets) -> IntervalSet:
    merged: list[Interval] = []
    for s in sets:
        merged.extend(s.intervals)
    return IntervalSet.from_intervals(merged)


def gaps(s: IntervalSet, domain_lo, domain_hi) -> list[tuple[Interval, float]]:
    """Complementary intervals within [domain_lo, domain_hi] between
    consecutive members, each with a decimal width approximation."""
    if not s.intervals:
        raise ValueError("gap analysis needs a nonempty interval set")
    domain_lo = as_alg(domain_lo)
    domain_hi = as_alg(domain_hi)
    out: list[tuple[Interval, float]] = []

    def add(lo, hi, lo_closed, hi_closed):
        if lo < hi or (lo == hi and lo_closed and hi_closed):
            iv = Interval(lo, hi, lo_closed, hi_closed)
            out.append((iv, float(iv.width())))

    first = s.intervals[0]
    if domain_lo < first.lo:
        add(domain_lo, first.lo, True, not first.lo_closed)
    for a, b in zip(s.intervals, s.intervals[1:]):
        add(a.hi, b.lo, not a.hi_closed, not b.lo_closed)
    last = s.intervals[-1]
    if last.hi < domain_hi:
        add(last.hi, domain_hi, not last.hi_closed, True)
    return out


@dataclass
class CoverageReport:
    m_max: int
    covered: IntervalSet
    covered_measure: float
    uncovered: list[tuple[Interval, float]]
    uncovered_measure: float
    excluded_points_clear: bool

    @property
    def consistent(self) -> bool:
        return self.excluded_points_clear

    def record_lines(self) -> list[str]:
        lines = [f"# coverage M={self.m_max} intervals={len(self.covered.intervals)} "
                 f"covered~{self.covered_measure:.5f} "
                 f"uncovered~{self.uncovered_measure:.5f} "
                 f"reciprocals_excluded={self.excluded_points_clear}"]
        lines += self.covered.record_lines()
        return lines


def coverage_report(m_max: int) -> CoverageReport:
    """Union of A_2..A_M with covered/uncovered measure and a check that
    no reciprocal 1/b lies in the union (as the full-union conjecture
    demands).  A report, never an assertion about the infinite union."""
    if m_max < 2:
        raise ValueError("M must be at least 2")
    u = union(am_set(m) for m in range(2, m_max + 1))
    uncovered = gaps(u, ZERO, ONE) if u else [(Interval(ZERO, ONE, True, True), 1.0)]
    clear = all(not u.contains(Fraction(1, b)) for b in range(1, m_max + 1))
    return CoverageReport(
        m_max=m_max,
        covered=u,
        covered_measure=u.measure(),
        uncovered=uncovered,
        uncovered_measure=sum(w for _, w in uncovered),
        excluded_points_clear=clear,
    )


# ---------------------------------------------------------------------------
# SVG rendering

_MARGIN = 40
_PLOT_W = 920
_ROW_H = 9
_ROW_GAP = 2


def _hue_color(idx: int, count: int) -> str:
    """Rainbow ramp: red for the lowest row up to violet for the highest."""
    hue = 300.0 * idx / max(count - 1, 1)
    return f"hsl({hue:.1f},85%,45%)"


def _x(value: float) -> float:
    return _MARGIN + value * _PLOT_W


def render_figure(sets, u: IntervalSet, out_path: str) -> str:
    """Writes an SVG of the interval sets as stacked horizontal bars:
    one colored row per set (first at the bottom), the union in black at
    the very bottom.  Deterministic output for fixed inputs."""
    sets = list(sets)
    rows = len(sets) + 1
    height = 2 * _MARGIN + rows * (_ROW_H + _ROW_GAP)
    width = 2 * _MARGIN + _PLOT_W
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    # x axis with ticks at 0, 0.25, .., 1
    axis_y = height - _MARGIN + 4
    parts.append(
        f'<line x1="{_x(0):.1f}" y1="{axis_y}" x2="{_x(1):.1f}" y2="{axis_y}" '
        f'stroke="black" stroke-width="1"/>'
    )
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        tx = _x(tick)
        parts.append(
            f'<line x1="{tx:.1f}" y1="{axis_y}" x2="{tx:.1f}" '
            f'y2="{axis_y + 4}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{tx:.1f}" y="{axis_y + 16}" font-size="10" '
            f'text-anchor="middle">{tick:g}</text>'
        )

    def bars(iv_set: IntervalSet, y: float, color: str):
        for iv in iv_set.intervals:
            x0 = _x(float(iv.lo))
            x1 = _x(float(iv.hi))
            w = max(x1 - x0, 0.5)  # keep hairline intervals visible
            parts.append(
                f'<rect x="{x0:.2f}" y="{y:.2f}" width="{w:.2f}" '
                f'height="{_ROW_H}" fill="{color}"/>'
            )

    # union row at the very bottom, then the sets stacked above it
    base_y = height - _MARGIN - _ROW_H
    bars(u, base_y, "black")
    for idx, s in enumerate(sets):
        y = base_y - (idx + 1) * (_ROW_H + _ROW_GAP)
        bars(s, y, _hue_color(idx, len(sets)))
    parts.append("</svg>")
    doc = "\n".join(parts) + "\n"
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(doc)
    return doc
