"""Grid argmax kernel, compiled when available.

The Cython build of ``_kernels.pyx`` is used when it imports and
``RELFAIR_PURE_PYTHON`` is unset; otherwise the pure-Python reference
in ``_kernels_py`` is used. Both return identical results. Inputs whose
objective could leave int64 always take the Python path.
"""
from __future__ import annotations

import os

from . import _kernels_py
from ._kernels_py import BLEND, LEX, MAX, MIN, PROD

try:
    if os.environ.get("RELFAIR_PURE_PYTHON"):
        raise ImportError
    from . import _kernels as _compiled

    COMPILED = True
except ImportError:
    _compiled = None
    COMPILED = False

INT64_SAFE = 2**62

__all__ = ["BLEND", "LEX", "MAX", "MIN", "PROD", "COMPILED", "box_argmax", "fits_int64"]


def fits_int64(axes, rows, mode, a1=0, a2=0) -> bool:
    """Conservative check that no intermediate value can overflow int64."""
    top = max((abs(c) for a in axes for c in a), default=0)
    n = len(axes)
    if mode == PROD:
        return top**n < INT64_SAFE
    rmax = max((abs(c) for r in rows for c in r), default=0)
    bound = n * top * rmax
    if mode == BLEND:
        bound *= abs(a1) + abs(a2)
    return bound < INT64_SAFE


def box_argmax(axes, rows, mode, a1=0, a2=0, force_python: bool = False):
    """(best value, argmax points) of an integer objective over a box grid."""
    axes = [list(map(int, a)) for a in axes]
    rows = [list(map(int, r)) for r in rows]
    if _compiled is not None and not force_python and fits_int64(axes, rows, mode, a1, a2):
        return _compiled.box_argmax(axes, rows, mode, int(a1), int(a2))
    return _kernels_py.box_argmax(axes, rows, mode, a1, a2)
