"""Evaluators for f(n) = floor(a^2 n) - floor(a floor(a n)) and its variants.

Everything here is computed in exact arithmetic: rational parameters go
through pure integer floor division, quadratic irrationals stay inside
their field Q(sqrt(d)), and non-algebraic constants (pi, e) go through
certified enclosures.
"""

from __future__ import annotations

import math

from .enclosure import Enclosure, certified_floor
from .exact import QuadExt, as_alg, floor_linear


class NonPositiveAlpha(ValueError):
    """The dilation parameter must be positive."""


def _check_alpha(alpha: QuadExt) -> None:
    if alpha.sign() <= 0:
        raise NonPositiveAlpha(f"parameter must be positive, got {alpha}")


def f_eval(alpha, n: int) -> int:
    """floor(alpha^2 n) - floor(alpha floor(alpha n)), exactly.

    Defined as 0 at n = 0 (the natural extension used by the periodicity
    reduction for rational parameters).
    """
    alpha = as_alg(alpha)
    _check_alpha(alpha)
    if n == 0:
        return 0
    if n < 0:
        raise ValueError("n must be nonnegative")
    if alpha.q == 0:
        a, b = alpha.p, alpha.r
        return (a * a * n) // (b * b) - (a * ((a * n) // b)) // b
    p, q, d, r = alpha.p, alpha.q, alpha.d, alpha.r
    m = floor_linear(p * n, q * n, d, r)
    t1 = floor_linear((p * p + q * q * d) * n, 2 * p * q * n, d, r * r)
    t2 = floor_linear(p * m, q * m, d, r)
    return t1 - t2


def f_eval_real(constant: Enclosure, n: int) -> int:
    """f(n) for a constant known only through a certified enclosure.

    All three floors are certified against the true constant; raises
    PrecisionExhausted if the stored digits cannot decide one of them.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = certified_floor(constant, lambda lo, hi: (lo * n, hi * n))
    t1 = certified_floor(constant, lambda lo, hi: (lo * lo * n, hi * hi * n))
    t2 = certified_floor(constant, lambda lo, hi: (lo * m, hi * m))
    return t1 - t2


def g_ceil_eval(alpha, n: int) -> int:
    """Ceiling variant: ceil(alpha^2 n) - ceil(alpha ceil(alpha n))."""
    alpha = as_alg(alpha)
    _check_alpha(alpha)
    if n < 1:
        raise ValueError("n must be positive")
    an_ceil = math.ceil(alpha * n)
    return math.ceil(alpha * alpha * n) - math.ceil(alpha * an_ceil)


def h_mixed_eval(beta, n: int) -> int:
    """Mixed variant: floor(beta^2 n) - floor(beta ceil(beta n))."""
    beta = as_alg(beta)
    _check_alpha(beta)
    if n < 1:
        raise ValueError("n must be positive")
    bn_ceil = math.ceil(beta * n)
    return math.floor(beta * beta * n) - math.floor(beta * bn_ceil)


def phi(a: int, b: int, n: int) -> int:
    """The mod-like map n -> n*a - floor(n*a/b)*b, with range [[0, b-1]]."""
    if not (0 < a < b):
        raise ValueError(f"need 0 < a < b, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a={a} and b={b} must be coprime")
    return (n * a) % b


def sandwich_bounds(alpha, n: int) -> tuple[int, int]:
    """(floor(alpha*frac(alpha n)), ceil(alpha*frac(alpha n))).

    f_eval(alpha, n) always equals one of the two values.
    """
    alpha = as_alg(alpha)
    _check_alpha(alpha)
    if alpha.is_integer():
        raise NonPositiveAlpha("sandwich bounds need a non-integer parameter")
    x = alpha * (alpha * n).frac()
    return math.floor(x), math.ceil(x)


def alt_form_eval(alpha, n: int) -> int:
    """Independent oracle for f_eval via the integer/fractional split
    of the parameter: with a0 = floor(alpha), th = alpha - a0,

        f(n) = -a0*floor(th n) + floor(2 a0 th n + th^2 n)
               - floor(a0 th n + th floor(th n))
    """
    alpha = as_alg(alpha)
    _check_alpha(alpha)
    if alpha.is_integer():
        raise NonPositiveAlpha("alternate form needs a non-integer parameter")
    a0 = math.floor(alpha)
    th = alpha - a0
    thn_floor = math.floor(th * n)
    term2 = math.floor(2 * a0 * th * n + th * th * n)
    term3 = math.floor(a0 * th * n + th * thn_floor)
    return -a0 * thn_floor + term2 - term3
