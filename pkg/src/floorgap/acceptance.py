"""Full-scale verification suite.

Each criterion is an independent callable returning (ok, detail); the CLI
`check` subcommand and the acceptance tests both run this registry.  The
grids here are the full published scales; the unit tests use smaller ones.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .exact import QuadExt
from .evaluate import alt_form_eval, f_eval, f_eval_real, phi, sandwich_bounds
from .enclosure import get_constant
from .rational import (
    RationalParam,
    bezout_witness,
    closed_form_eval,
    conjecture317_sweep,
    decomposition_identity_check,
    lemma33_probe,
    predicted_range,
    range_rational,
)
from .irrational import (
    RationalDegenerate,
    alpha_t,
    observed_range,
    scaled_bound_check,
    sqrt_neighborhood_check,
)
from .intervals import ONE, am_set, gaps, union

SQRT2 = QuadExt(0, 1, 2, 1)


def criterion_1_rational_dichotomy():
    """Sub-unitary ranges: {0} iff numerator is 1, else {0, 1}; b <= 40."""
    for b in range(2, 41):
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            got = range_rational(a, b).as_set()
            want = frozenset({0}) if a == 1 else frozenset({0, 1})
            if got != want:
                return False, f"a={a} b={b}: got {sorted(got)}"
    return True, "all coprime a < b <= 40"


def criterion_2_closed_form_ranges():
    """Closed-form predictions equal brute-force ranges on their grids."""
    cases = 0
    # denominator 2, covering s <= 20 in both half-integer families
    for a in range(3, 84, 2):
        pred = predicted_range(a, 2)
        if pred is None:
            return False, f"no prediction for {a}/2"
        if pred != range_rational(a, 2).as_set():
            return False, f"{a}/2 mismatch"
        cases += 1
    # denominator 3, all six families, s <= 20
    for a in range(4, 183):
        if math.gcd(a, 3) != 1:
            continue
        pred = predicted_range(a, 3)
        if pred is None:
            return False, f"no prediction for {a}/3"
        if pred != range_rational(a, 3).as_set():
            return False, f"{a}/3 mismatch"
        cases += 1
    # a_frac = 1 families with u in {0, 1, b-1}; b <= 15, s <= 8
    for b in range(2, 16):
        for s in range(0, 9):
            for u in {0, 1, b - 1}:
                if s == 0 and u == 0:
                    continue  # sub-unitary 1/b, covered by criterion 1
                a = (s * b + u) * b + 1
                pred = predicted_range(a, b)
                if pred is None:
                    return False, f"no prediction for {a}/{b}"
                if pred != range_rational(a, b).as_set():
                    return False, f"{a}/{b} mismatch"
                cases += 1
    return True, f"{cases} parameters"


def criterion_3_oracle_identities():
    """Single-point closed form, alternate form and the phi-decomposition
    all agree with direct evaluation on the full grid b <= 12, s <= 4."""
    checked = 0
    for b in range(2, 13):
        for s in range(0, 5):
            for u in range(b):
                for af in range(1, b):
                    if math.gcd(af, b) != 1:
                        continue
                    a = (s * b + u) * b + af
                    param = RationalParam(a=a, b=b, s=s, u=u, a_frac=af)
                    alpha = Fraction(a, b)
                    for n in range(0, b * b):
                        cf = closed_form_eval(param, n)
                        fv = f_eval(alpha, n)
                        if cf != fv:
                            return False, f"closed form {a}/{b} n={n}: {cf}!={fv}"
                        if n >= 1:
                            av = alt_form_eval(alpha, n)
                            if av != fv:
                                return False, f"alt form {a}/{b} n={n}: {av}!={fv}"
                            lhs, rhs = decomposition_identity_check(param, n)
                            if lhs != rhs:
                                return False, f"decomposition {a}/{b} n={n}"
                        checked += 1
    return True, f"{checked} grid points"


def criterion_4_conjecture_sweep():
    """No counterexample to the sb - a/b range conjecture on b <= 10,
    s <= 6 (evidence, not proof)."""
    report = conjecture317_sweep(10, 6)
    detail = f"{report.checked_count} parameters"
    if not report.ok:
        return False, f"counterexamples: {report.counterexamples[:3]}"
    return True, detail


def criterion_5_golden_family():
    """Observed range of f for alpha(t) equals [[1, floor(alpha(t))]] at
    N = 20000 for every valid t <= 60; golden ratio gives {1}; the t = 504
    parameter covers all of [[1, 22]]."""
    for t in range(1, 61):
        try:
            g = alpha_t(t)
        except RationalDegenerate:
            continue
        fl = math.floor(g.alpha)
        rep = observed_range(g.alpha, 20000)
        if set(rep.observed) != set(range(1, fl + 1)):
            return False, f"t={t}: observed {rep.observed}"
    phi_rep = observed_range(alpha_t(1).alpha, 20000)
    if phi_rep.observed != (1,):
        return False, f"golden ratio observed {phi_rep.observed}"
    tau_rep = observed_range(alpha_t(504).alpha, 20000)
    if tau_rep.observed != tuple(range(1, 23)):
        return False, f"t=504 observed {tau_rep.observed}"
    if len(tau_rep.witnesses) != 22:
        return False, "t=504 missing witnesses"
    return True, "t <= 60 at N=20000; t=504 fully witnessed"


def criterion_6_value_tables():
    """Spot values for pi, e, sqrt(2), 2+sqrt(2) and 1+1/sqrt(2)."""
    pi = get_constant("pi")
    e = get_constant("e")
    pi_expect = (0, 1, 1, 2, 2, 3, 4)
    for n, want in enumerate(pi_expect, start=1):
        got = f_eval_real(pi, n)
        if got != want:
            return False, f"pi n={n}: {got} != {want}"
    e_expect = {7: 0, 10: 0, 2: 1, 3: 1, 5: 1, 6: 1, 9: 1,
                1: 2, 4: 2, 8: 2, 11: 3}
    for n, want in e_expect.items():
        got = f_eval_real(e, n)
        if got != want:
            return False, f"e n={n}: {got} != {want}"
    if set(observed_range(SQRT2, 1000).observed) != {1, 2}:
        return False, "sqrt(2) observed range"
    two_plus = 2 + SQRT2
    for n, want in ((1, 1), (2, 3), (3, 0), (4, 2)):
        if f_eval(two_plus, n) != want:
            return False, f"2+sqrt(2) n={n}"
    if set(observed_range(two_plus, 100).observed) != {0, 1, 2, 3}:
        return False, "2+sqrt(2) observed range"
    half = two_plus / 2  # 1 + 1/sqrt(2)
    for n, want in ((1, 1), (2, 0), (7, 2)):
        if f_eval(half, n) != want:
            return False, f"1+1/sqrt(2) n={n}"
    if observed_range(half, 100).classification != "D":
        return False, "1+1/sqrt(2) classification"
    if observed_range(two_plus, 100).classification != "B":
        return False, "2+sqrt(2) classification"
    return True, "all exact matches"


def expected_union_50() -> list[tuple[QuadExt, QuadExt]]:
    """The published 10-interval union of A_2..A_50 (all half-open)."""
    return [
        (QuadExt(0, 1, 2, 10), QuadExt(1, 0, 1, 7)),     # [1/(5 sqrt 2), 1/7)
        (QuadExt(0, 1, 3, 12), QuadExt(7, 0, 1, 48)),    # [1/(4 sqrt 3), 7/48)
        (QuadExt(0, 1, 47, 47), QuadExt(1, 0, 1, 6)),    # [1/sqrt(47), 1/6)
        (QuadExt(0, 1, 35, 35), QuadExt(6, 0, 1, 35)),   # [1/sqrt(35), 6/35)
        (QuadExt(0, 1, 34, 34), QuadExt(1, 0, 1, 5)),    # [1/sqrt(34), 1/5)
        (QuadExt(0, 1, 2, 7), QuadExt(10, 0, 1, 49)),    # [sqrt(2)/7, 10/49)
        (QuadExt(0, 1, 6, 12), QuadExt(1, 0, 1, 4)),     # [1/(2 sqrt 6), 1/4)
        (QuadExt.sqrt_rational(3, 47), QuadExt(1, 0, 1, 3)),
        (QuadExt.sqrt_rational(5, 44), QuadExt(1, 0, 1, 2)),
        (2 * QuadExt.sqrt_rational(3, 47), QuadExt(1)),
    ]


@lru_cache(maxsize=1)
def _union_2_to_50():
    return union(am_set(m) for m in range(2, 51))


def criterion_7_am_union():
    """Union of A_2..A_50 equals the published 10 intervals exactly."""
    u = _union_2_to_50()
    expect = expected_union_50()
    if len(u.intervals) != len(expect):
        return False, f"{len(u.intervals)} intervals instead of {len(expect)}"
    for iv, (lo, hi) in zip(u.intervals, expect):
        if not (iv.lo == lo and iv.hi == hi
                and iv.lo_closed and not iv.hi_closed):
            return False, f"interval mismatch: {iv} vs [{lo},{hi})"
    return True, "10 intervals, exact endpoint equality"


def criterion_8_gap_analysis():
    """9 gaps between the union's intervals; the three narrow ones match
    the published widths to one unit in the last printed digit."""
    u = _union_2_to_50()
    inner = gaps(u, u.intervals[0].lo, ONE)
    # drop the trailing complement [1, 1] if present: union ends at 1
    inner = [(iv, w) for iv, w in inner if iv.lo < ONE]
    if len(inner) != 9:
        return False, f"{len(inner)} gaps instead of 9"
    targets = [(0.1458, 0.00003), (0.1715, 0.00007), (0.2041, 0.00004)]
    for near, want_w in targets:
        match = [w for iv, w in inner if abs(float(iv.lo) - near) < 0.001]
        if len(match) != 1:
            return False, f"gap near {near} not found uniquely"
        if abs(match[0] - want_w) > 0.00001:
            return False, f"gap near {near}: width {match[0]:.6f}"
    return True, "9 gaps; narrow widths 0.00003/0.00007/0.00004 confirmed"


def criterion_9_sqrt_neighborhoods():
    """f(n) = 1 throughout [sqrt(k/n), sqrt(k/n)+eps) on 200 random valid
    (k, n) pairs, 6 exact evaluations each."""
    rng = random.Random(20250829)
    done = 0
    total_evals = 0
    while done < 200:
        n = rng.randint(2, 100)
        k = rng.randint(1, n - 1)
        s = math.isqrt(k * n)
        if s * s == k * n:
            continue
        rep = sqrt_neighborhood_check(k, n, samples=5)
        total_evals += rep.checked
        if not rep.ok:
            return False, f"(k,n)=({k},{n}): {rep.failures[:2]}"
        done += 1
    return True, f"200 pairs, {total_evals} evaluations"


def _random_positive_noninteger(rng) -> QuadExt:
    if rng.random() < 0.5:
        b = rng.randint(2, 50)
        a = rng.randint(1, 12 * b)
        if a % b == 0:
            a += 1
        return QuadExt(a, 0, 1, b)
    d = rng.choice([2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 19, 21, 23])
    q = rng.randint(1, 5)
    p = rng.randint(0, 10)
    r = rng.randint(1, 10)
    return QuadExt(p, q, d, r)


def criterion_10_foundation_invariants():
    """Sandwich, envelope, periodicity, phi range, the bijection
    criterion, Bezout witnesses and the scaled-parameter bound."""
    rng = random.Random(1202)
    # sandwich and envelope on random parameters
    for _ in range(10000):
        alpha = _random_positive_noninteger(rng)
        n = rng.randint(1, 500)
        f = f_eval(alpha, n)
        lo, hi = sandwich_bounds(alpha, n)
        if not (lo <= f <= hi and f in (lo, hi)):
            return False, f"sandwich: alpha={alpha} n={n}"
        if not 0 <= f <= math.ceil(alpha):
            return False, f"envelope: alpha={alpha} n={n}"
    # periodicity with period b^2
    for _ in range(2000):
        b = rng.randint(2, 20)
        a = rng.randint(1, 8 * b)
        if math.gcd(a, b) != 1:
            continue
        n = rng.randint(1, 100000)
        alpha = Fraction(a, b)
        if f_eval(alpha, n) != f_eval(alpha, n % (b * b)):
            return False, f"periodicity: {a}/{b} n={n}"
    # phi surjects onto [[0, b-1]] within one period
    for b in range(2, 21):
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            if {phi(a, b, n) for n in range(1, b * b + 1)} != set(range(b)):
                return False, f"phi range: a={a} b={b}"
    # the (x, y) -> ax + by coverage criterion
    for b in range(2, 26):
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            injective, covers = lemma33_probe(a, b)
            if not injective or covers != (a == 1):
                return False, f"bijection probe: a={a} b={b}"
    # Bezout witnesses attain the value 1
    for b in range(3, 26):
        for a in range(2, b):
            if math.gcd(a, b) != 1:
                continue
            n = bezout_witness(a, b)
            if f_eval(Fraction(a, b), n) != 1:
                return False, f"bezout: a={a} b={b} n={n}"
    # scaled-parameter bound
    for p in range(1, 4):
        for t in range(1, 11):
            try:
                rep = scaled_bound_check(p, t, 1000)
            except RationalDegenerate:
                continue
            if not rep.ok:
                return False, f"scaled bound p={p} t={t}: {rep.violations[:2]}"
    return True, "zero violations"


CRITERIA = [
    (1, "rational dichotomy", criterion_1_rational_dichotomy),
    (2, "closed-form range theorems", criterion_2_closed_form_ranges),
    (3, "oracle identities", criterion_3_oracle_identities),
    (4, "supra-unitary range conjecture sweep", criterion_4_conjecture_sweep),
    (5, "golden-ratio family ranges", criterion_5_golden_family),
    (6, "constant and quadratic value tables", criterion_6_value_tables),
    (7, "A_m union for m <= 50", criterion_7_am_union),
    (8, "gap analysis", criterion_8_gap_analysis),
    (9, "square-root neighborhoods", criterion_9_sqrt_neighborhoods),
    (10, "foundation invariants", criterion_10_foundation_invariants),
]


def run_all(write=print) -> bool:
    all_ok = True
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        write(f"[{status}] criterion {num}: {title} -- {detail}")
    return all_ok
