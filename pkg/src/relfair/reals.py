"""High-precision reals for objectives with square roots or b^p.

A private mpmath context at 128-bit mantissa. Two values closer than
``TIE_TOL`` are treated as a tie.
"""
from __future__ import annotations

import mpmath

MP = mpmath.MPContext()
MP.prec = 128
TIE_TOL = MP.mpf(2) ** -64


def is_real(v) -> bool:
    return isinstance(v, MP.mpf)


def real(v):
    if is_real(v):
        return v
    return MP.mpf(int(v.numerator)) / MP.mpf(int(v.denominator)) if hasattr(v, "numerator") else MP.mpf(v)


to_real = real


def sqrt(v):
    return MP.sqrt(real(v))


def power(b, p):
    return MP.power(real(b), real(p))


def compare(a, b) -> int:
    """-1/0/1; exact for rationals, tolerance ``TIE_TOL`` once a real is involved."""
    if is_real(a) or is_real(b):
        d = real(a) - real(b)
        if abs(d) <= TIE_TOL:
            return 0
        return 1 if d > 0 else -1
    return (a > b) - (a < b)


def is_tie(a, b) -> bool:
    """True when a and b are reals that compare equal only within tolerance."""
    return (is_real(a) or is_real(b)) and compare(a, b) == 0 and real(a) != real(b)


def fmt_real(v, digits: int = 30) -> str:
    return MP.nstr(real(v), digits)
