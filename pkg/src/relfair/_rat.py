"""Exact rational scalar used for every coordinate.

``gmpy2.mpq`` is used when importable; otherwise ``fractions.Fraction``.
Both compare, hash and print identically for the values used here, so
results do not depend on which backend was picked.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction

try:
    if os.environ.get("RELFAIR_PURE_PYTHON"):
        raise ImportError
    from gmpy2 import mpq as Rat

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised in the fallback CI job
    Rat = Fraction
    BACKEND = "fractions"

_RAT_RE = re.compile(r"^\s*[-+]?\d+(\s*/\s*\d+)?\s*$")

ZERO = Rat(0)
ONE = Rat(1)


def as_rat(value) -> "Rat":
    """Convert an int, Fraction, mpq or rational string to ``Rat``.

    Floats and decimal strings are rejected: coordinates must be exact.
    """
    if type(value) is Rat:
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Rat(value)
    if isinstance(value, str):
        return parse_rat(value)
    if isinstance(value, float):
        raise ValueError(f"floats are not accepted as exact coordinates: {value!r}")
    try:
        return Rat(value.numerator, value.denominator)
    except AttributeError:
        raise ValueError(f"not a rational: {value!r}") from None


def parse_rat(text: str) -> "Rat":
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational {text!r} (expected 'p/q' or an integer)")
    num, _, den = text.replace(" ", "").partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Rat(int(num), int(den) if den else 1)


def fmt_rat(value) -> str:
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_sqrt(value):
    """Exact square root of a nonnegative rational, or None if irrational."""
    from math import isqrt

    value = as_rat(value)
    if value < 0:
        raise ValueError("negative argument")
    p, q = int(value.numerator), int(value.denominator)
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Rat(rp, rq)
    return None
