"""floorgap: exact ranges of f(n) = floor(a^2 n) - floor(a floor(a n)).

An exact-arithmetic library and CLI for the generalized polynomial built
from two dilated floor functions at the same scale: evaluation for
rational, quadratic-irrational and certified-constant parameters, exact
range computation, conjecture sweeps, and the sets
A_m = {alpha in (0,1] : f_alpha(m) = 1} as exact interval unions.
"""

from .exact import (
    EmptyInterval,
    IncompatibleRadicands,
    QuadExt,
    as_alg,
    ceil_alg,
    cmp,
    floor_alg,
    frac_alg,
    isqrt,
    normalize_quad,
    parse_alg,
    rational_between,
    squarefree_decompose,
)
from .enclosure import (
    Enclosure,
    PrecisionExhausted,
    floor_enclosure,
    get_constant,
    load_constants,
)
from .evaluate import (
    NonPositiveAlpha,
    alt_form_eval,
    f_eval,
    f_eval_real,
    g_ceil_eval,
    h_mixed_eval,
    phi,
    sandwich_bounds,
)
from .rational import (
    NotCoprime,
    RangeSet,
    RationalParam,
    SweepReport,
    bezout_witness,
    closed_form_eval,
    conjecture317_sweep,
    decompose_param,
    decomposition_identity_check,
    lemma33_probe,
    predicted_range,
    range_rational,
)
from .irrational import (
    GoldenParam,
    PerfectSquare,
    RangeReport,
    RationalAlpha,
    RationalDegenerate,
    alpha_t,
    classify,
    conjecture43_check,
    conjecture47_scan,
    eps_kn,
    fractional_window_witness,
    full_range_witnesses,
    observed_range,
    scaled_bound_check,
    sqrt_neighborhood_check,
)
from .intervals import (
    Interval,
    IntervalSet,
    am_set,
    breakpoints,
    coverage_report,
    gaps,
    render_figure,
    union,
)

__version__ = "0.1.0"
