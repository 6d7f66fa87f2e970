# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid argmax kernel on int64 coordinates.

Mirrors ``_kernels_py.box_argmax``. The caller guarantees that every
objective value fits in int64 (see ``kernels.fits_int64``).
"""
from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

DEF MAXN = 16

cdef enum:
    MIN = 0
    MAX = 1
    BLEND = 2
    PROD = 3
    LEX = 4


cdef inline void _sort(int64_t* v, int k) noexcept nogil:
    cdef int i, j
    cdef int64_t t
    for i in range(1, k):
        t = v[i]
        j = i - 1
        while j >= 0 and v[j] > t:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = t


cdef inline int _cmp(int64_t* a, int64_t* b, int k) noexcept nogil:
    cdef int i
    for i in range(k):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


def box_argmax(axes, rows, int mode, a1=0, a2=0):
    cdef int n = len(axes)
    cdef int k = len(rows)
    if n < 1 or n > MAXN:
        raise ValueError(f"kernel supports 1..{MAXN} axes")
    if mode not in (MIN, MAX, BLEND, PROD, LEX):
        raise ValueError(f"unknown kernel mode {mode}")
    if mode != PROD and k == 0:
        raise ValueError("this mode needs at least one row")

    cdef int64_t ia1 = a1, ia2 = a2
    cdef int lens[MAXN]
    cdef int idx[MAXN]
    cdef int64_t x[MAXN]
    cdef int64_t** ax = <int64_t**>malloc(n * sizeof(int64_t*))
    cdef int64_t* R = <int64_t*>malloc((k + 1) * n * sizeof(int64_t))
    cdef int64_t* vals = <int64_t*>malloc((k + 1) * sizeof(int64_t))
    cdef int64_t* bestv = <int64_t*>malloc((k + 1) * sizeof(int64_t))
    cdef int i, j, r, c, have = 0
    cdef int64_t s, lo, hi, v = 0, best = 0
    arg = []
    try:
        for i in range(n):
            ax[i] = NULL
        for i in range(n):
            lens[i] = len(axes[i])
            if lens[i] == 0:
                return None, []
            ax[i] = <int64_t*>malloc(lens[i] * sizeof(int64_t))
            for j in range(lens[i]):
                ax[i][j] = axes[i][j]
            idx[i] = 0
        for r in range(k):
            for i in range(n):
                R[r * n + i] = rows[r][i]

        while True:
            for i in range(n):
                x[i] = ax[i][idx[i]]
            if mode == PROD:
                v = 1
                for i in range(n):
                    v *= x[i]
                c = 1 if not have else (1 if v > best else (0 if v == best else -1))
            elif mode == LEX:
                for r in range(k):
                    s = 0
                    for i in range(n):
                        s += R[r * n + i] * x[i]
                    vals[r] = s
                _sort(vals, k)
                c = 1 if not have else _cmp(vals, bestv, k)
            else:
                lo = hi = 0
                for r in range(k):
                    s = 0
                    for i in range(n):
                        s += R[r * n + i] * x[i]
                    if r == 0 or s < lo:
                        lo = s
                    if r == 0 or s > hi:
                        hi = s
                if mode == MIN:
                    v = lo
                elif mode == MAX:
                    v = hi
                else:
                    v = ia1 * lo + ia2 * hi
                c = 1 if not have else (1 if v > best else (0 if v == best else -1))
            if c > 0:
                have = 1
                if mode == LEX:
                    for r in range(k):
                        bestv[r] = vals[r]
                else:
                    best = v
                arg = [tuple([x[i] for i in range(n)])]
            elif c == 0:
                arg.append(tuple([x[i] for i in range(n)]))

            # odometer step, last axis fastest
            i = n - 1
            while i >= 0:
                idx[i] += 1
                if idx[i] < lens[i]:
                    break
                idx[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        for i in range(n):
            if ax[i] != NULL:
                free(ax[i])
        free(ax)
        free(R)
        free(vals)
        if mode == LEX and have:
            out = tuple([bestv[r] for r in range(k)])
        free(bestv)
    if mode == LEX:
        return out, arg
    return best, arg
