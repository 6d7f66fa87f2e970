"""Vertex enumeration and exact containment between unions of polytopes.

All polytopes met in practice are bounded (they live inside generator
boxes) and low dimensional, so vertices are found by brute force over
n-subsets of the constraints.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from operator import mul

from ._rat import ZERO, Rat
from .lp import EQ, GE, LE, HPolyhedron, LinConstraint


def _as_le(P: HPolyhedron):
    """Constraints of P as (a, b) pairs meaning a.x <= b."""
    return P.le_rows


def _dot(a, x):
    return sum(map(mul, a, x), ZERO)


def _solve_square(rows, rhs):
    """Unique solution of a square linear system, else None."""
    n = len(rows)
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        prow = [v / p for v in M[col]]
        M[col] = prow
        for r in range(n):
            if r != col:
                f = M[r][col]
                if f:
                    M[r] = [a - f * b for a, b in zip(M[r], prow)]
    return tuple(M[r][n] for r in range(n))


def _brute_vertices(cons, n):
    found = set()
    for combo in combinations(range(len(cons)), n):
        sol = _solve_square([cons[k][0] for k in combo], [cons[k][1] for k in combo])
        if sol is None or sol in found:
            continue
        if all(_dot(a, sol) <= b for a, b in cons):
            found.add(sol)
    return tuple(sorted(found))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull2(points):
    """Exact convex hull vertices of planar points (collinear points dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(sorted(set(lower[:-1] + upper[:-1])))


def _clip2(poly, a, b):
    out = []
    m = len(poly)
    for k in range(m):
        p, q = poly[k], poly[(k + 1) % m]
        fp = a[0] * p[0] + a[1] * p[1] - b
        fq = a[0] * q[0] + a[1] * q[1] - b
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def vertices(P: HPolyhedron) -> tuple:
    """Sorted vertices of a bounded polyhedron, memoized on the object."""
    v = P.__dict__.get("_vertices")
    if v is None:
        v = _vertices(P)
        object.__setattr__(P, "_vertices", v)
    return v


@lru_cache(maxsize=65536)
def _vertices(P: HPolyhedron) -> tuple:
    """Sorted vertices of a bounded polyhedron; empty tuple if P is empty.

    Axis-aligned constraints are merged into a bounding box first and the
    remaining halfspaces that hold on the whole box are dropped. In the
    plane the box is then clipped directly; otherwise vertices come from
    brute force over n-subsets of the reduced constraints.
    """
    n = P.dim
    lo, hi = [None] * n, [None] * n
    general = []
    for a, b in _as_le(P):
        nz = [k for k in range(n) if a[k]]
        if not nz:
            if b < 0:
                return ()
            continue
        if len(nz) > 1:
            general.append((a, b))
            continue
        k = nz[0]
        bound = b / a[k]
        if a[k] > 0:
            hi[k] = bound if hi[k] is None or bound < hi[k] else hi[k]
        else:
            lo[k] = bound if lo[k] is None or bound > lo[k] else lo[k]
    if None in lo or None in hi:
        return _brute_vertices(list(_as_le(P)), n)
    if any(l > h for l, h in zip(lo, hi)):
        return ()
    keep = []
    for a, b in general:
        top = sum((c * (h if c > 0 else l) for c, l, h in zip(a, lo, hi)), ZERO)
        if top <= b:
            continue
        bottom = sum((c * (l if c > 0 else h) for c, l, h in zip(a, lo, hi)), ZERO)
        if bottom > b:
            return ()
        keep.append((a, b))
    if not keep:
        corners = {()}
        for l, h in zip(lo, hi):
            corners = {c + (v,) for c in corners for v in (l, h)}
        return tuple(sorted(corners))
    if n == 2:
        poly = [(lo[0], lo[1]), (hi[0], lo[1]), (hi[0], hi[1]), (lo[0], hi[1])]
        for a, b in keep:
            poly = _clip2(poly, a, b)
            if not poly:
                return ()
        return _hull2(poly)
    one = Rat(1)
    cons = list(keep)
    for k in range(n):
        e = tuple(one if j == k else ZERO for j in range(n))
        cons.append((e, hi[k]))
        cons.append((tuple(-c for c in e), -lo[k]))
    return _brute_vertices(cons, n)


def contains_point(P: HPolyhedron, x) -> bool:
    return all(_dot(a, x) <= b for a, b in _as_le(P))


def in_union(pieces, x) -> bool:
    return any(contains_point(P, x) for P in pieces)


def is_empty(P: HPolyhedron) -> bool:
    return not vertices(P)


def centroid(points):
    k = len(points)
    return tuple(sum(col, ZERO) / k for col in zip(*points))


def subset_of_union(P: HPolyhedron, Qs) -> tuple:
    """Decide P ⊆ ∪Qs exactly.

    Returns ``(True, None)`` or ``(False, x)`` with ``x`` in P outside every Q.
    Uses P ⊆ Q ∪ R  ⟺  cl(P ∖ Q) ⊆ R for closed R, splitting P ∖ Q along
    the violated facets of Q.
    """
    verts = vertices(P)
    if not verts:
        return True, None
    for Q in Qs:
        if all(contains_point(Q, v) for v in verts):
            return True, None
    if not Qs:
        return False, centroid(verts)
    Q, rest = Qs[0], Qs[1:]
    for a, b in _as_le(Q):
        if any(_dot(a, v) > b for v in verts):
            R = P.with_constraints([LinConstraint(a, b, GE)])
            ok, x = subset_of_union(R, rest)
            if not ok:
                if not contains_point(Q, x):
                    return False, x
                # x sits on Q's boundary; move towards a vertex outside Q
                out = next(v for v in vertices(R) if _dot(a, v) > b)
                return False, _toward(x, out, Q, rest)
    return True, None


def _toward(x, v, Q, rest):
    t = Rat(1, 2)
    for _ in range(200):
        y = tuple(xi + t * (vi - xi) for xi, vi in zip(x, v))
        if not contains_point(Q, y) and not in_union(rest, y):
            return y
        t /= 2
    return v


def union_subset(As, Bs) -> tuple:
    """Decide ∪As ⊆ ∪Bs; returns (ok, witness)."""
    Bs = tuple(Bs)
    for P in As:
        ok, x = subset_of_union(P, Bs)
        if not ok:
            return False, x
    return True, None


def union_equal(As, Bs) -> tuple:
    """Decide ∪As = ∪Bs; witness is ``(x, side)`` with side 'left' if x ∈ ∪As only."""
    ok, x = union_subset(As, Bs)
    if not ok:
        return False, (x, "left")
    ok, x = union_subset(Bs, As)
    if not ok:
        return False, (x, "right")
    return True, None


def intersect(P: HPolyhedron, Q: HPolyhedron) -> HPolyhedron:
    return P.with_constraints(Q.constraints)


def scale_poly(P: HPolyhedron, a) -> HPolyhedron:
    """{a*x : x in P} for a >> 0."""
    return HPolyhedron(
        P.dim,
        tuple(LinConstraint(tuple(c / s for c, s in zip(k.coeffs, a)), k.rhs, k.sense) for k in P.constraints),
    )


def permute_poly(P: HPolyhedron, perm) -> HPolyhedron:
    """{x^pi : x in P}."""
    return HPolyhedron(
        P.dim,
        tuple(LinConstraint(tuple(k.coeffs[p] for p in perm), k.rhs, k.sense) for k in P.constraints),
    )


def translate_poly(P: HPolyhedron, alpha) -> HPolyhedron:
    """{x + alpha*1 : x in P}."""
    return HPolyhedron(
        P.dim,
        tuple(LinConstraint(k.coeffs, k.rhs + alpha * sum(k.coeffs, ZERO), k.sense) for k in P.constraints),
    )


def point_poly(x) -> HPolyhedron:
    n = len(x)
    one = Rat(1)
    return HPolyhedron(
        n,
        tuple(
            LinConstraint(tuple(one if j == i else ZERO for j in range(n)), x[i], EQ) for i in range(n)
        ),
    )
