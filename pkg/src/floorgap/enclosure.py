"""Certified rational enclosures of non-algebraic constants (pi, e).

Each constant ships as a long decimal string; an Enclosure is the interval
[truncation, truncation + one unit in the last used digit], which is
guaranteed to contain the true value.  Refinement consumes more stored
digits and always returns a new, strictly tighter value.
"""

from __future__ import annotations

import os
from fractions import Fraction
from importlib import resources

CONSTANTS_ENV_VAR = "FLOORGAP_CONSTANTS"

_INITIAL_DIGITS = 12


class PrecisionExhausted(Exception):
    """The stored digits were not enough to certify a floor."""


class Enclosure:
    """A shrinking rational interval certified to contain a real constant."""

    def __init__(self, name: str, decimal: str, depth: int | None = None):
        int_part, _, frac_part = decimal.partition(".")
        if not frac_part:
            raise ValueError(f"constant {name} needs a decimal expansion")
        self.name = name
        self._decimal = decimal
        self.max_depth = len(frac_part)
        self.depth = min(depth if depth is not None else _INITIAL_DIGITS,
                         self.max_depth)
        k = self.depth
        scaled = int(int_part + frac_part[:k])
        self.lo = Fraction(scaled, 10**k)
        self.hi = Fraction(scaled + 1, 10**k)

    def refine(self) -> "Enclosure | None":
        """A strictly tighter enclosure, or None if all digits are used."""
        if self.depth >= self.max_depth:
            return None
        return Enclosure(self.name, self._decimal,
                         min(2 * self.depth, self.max_depth))

    def __repr__(self):
        return f"Enclosure({self.name!r}, depth={self.depth}/{self.max_depth})"


def load_constants(path: str | None = None) -> dict[str, Enclosure]:
    """Read `name=decimal` lines from a constants file.

    Resolution order: explicit path, then the FLOORGAP_CONSTANTS
    environment variable, then the bundled resource.
    """
    if path is None:
        path = os.environ.get(CONSTANTS_ENV_VAR)
    if path is not None:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = (resources.files("floorgap") / "data" / "constants.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, decimal = line.partition("=")
        out[name.strip()] = Enclosure(name.strip(), decimal.strip())
    return out


def get_constant(name: str, path: str | None = None) -> Enclosure:
    constants = load_constants(path)
    try:
        return constants[name]
    except KeyError:
        raise KeyError(f"unknown constant {name!r}; have {sorted(constants)}")


def certified_floor(c: Enclosure, transform) -> int:
    """Floor of transform(constant), where transform maps the enclosure
    endpoints to a rational interval around the transformed value.

    `transform(lo, hi)` must return a (lo', hi') pair that encloses the
    image of the true constant.  Refines geometrically until both ends
    share a floor; raises PrecisionExhausted otherwise.
    """
    while True:
        a, b = transform(c.lo, c.hi)
        if a > b:
            a, b = b, a
        fa, fb = a.__floor__(), b.__floor__()
        if fa == fb:
            return fa
        nxt = c.refine()
        if nxt is None:
            raise PrecisionExhausted(
                f"{c.name}: floor ambiguous at {c.max_depth} digits"
            )
        c = nxt


def floor_enclosure(c: Enclosure, scale_num: int, scale_den: int) -> int | None:
    """Floor of constant * scale_num/scale_den, or None when ambiguous.

    None signals that either the scaled constant may be an integer or the
    stored digits are insufficient; it is a result variant, not an error.
    """
    scale = Fraction(scale_num, scale_den)
    try:
        return certified_floor(c, lambda lo, hi: (lo * scale, hi * scale))
    except PrecisionExhausted:
        return None
