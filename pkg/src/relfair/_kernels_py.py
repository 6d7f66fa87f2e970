"""Pure-Python grid argmax kernel.

Reference implementation of the compiled kernel in ``_kernels.pyx``: same
arguments, same results, Python integers so nothing can overflow.

A box grid is given by one ascending list of integer coordinates per axis.
Objectives are integer-valued:

``MIN``    min over rows r of r.x
``MAX``    max over rows r of r.x
``BLEND``  a1 * (min over rows) + a2 * (max over rows)
``PROD``   product of the coordinates (rows ignored)
``LEX``    the row values sorted ascending, compared lexicographically
"""
from itertools import product

MIN, MAX, BLEND, PROD, LEX = range(5)


def _objective(mode, rows, a1, a2):
    if mode == PROD:
        def f(x):
            out = 1
            for c in x:
                out *= c
            return out
        return f

    def dots(x):
        return [sum(r * c for r, c in zip(row, x)) for row in rows]

    if mode == MIN:
        return lambda x: min(dots(x))
    if mode == MAX:
        return lambda x: max(dots(x))
    if mode == BLEND:
        def f(x):
            d = dots(x)
            return a1 * min(d) + a2 * max(d)
        return f
    if mode == LEX:
        return lambda x: tuple(sorted(dots(x)))
    raise ValueError(f"unknown kernel mode {mode}")


def box_argmax(axes, rows, mode, a1=0, a2=0):
    """Best objective value over the grid and every grid point attaining it.

    Points come back in odometer order (last axis fastest).
    """
    f = _objective(mode, rows, a1, a2)
    best, arg = None, []
    for x in product(*axes):
        v = f(x)
        if best is None or v > best:
            best, arg = v, [x]
        elif v == best:
            arg.append(x)
    return best, arg
