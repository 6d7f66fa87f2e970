"""Weight sets W ⊂ Δ stored by vertices.

The relative fair objective only ever needs ``min_{w in W} w·v``, which a
linear form attains at a vertex, so the convex hull is never materialized.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from math import isqrt

from ._rat import ONE, ZERO, Rat, as_rat, rat_sqrt
from .errors import BadNorm, BadParameter, DimensionMismatch, EmptyInput, MonotonicityViolation, NotInSimplex
from .geometry import apply_perm, as_point
from .lp import EQ, GE, HPolyhedron, LinConstraint, feasible_point

NORMS = ("sup", "l1", "l2", "sd")


@dataclass(frozen=True)
class WeightSet:
    n: int
    vertices: tuple
    symmetric: bool = False
    approximate: bool = False

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.n, self.vertices, self.symmetric, self.approximate))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from ._rat import fmt_rat

        body = ", ".join("(" + ",".join(fmt_rat(c) for c in v) + ")" for v in self.vertices)
        return f"W{{{body}}}"


def _is_perm_closed(vertices) -> bool:
    vs = set(vertices)
    n = len(next(iter(vs)))
    return all(apply_perm(v, p) in vs for v in vs for p in permutations(range(n)))


def make_weight_set(vertices, symmetrize: bool = False, approximate: bool = False) -> WeightSet:
    vs = [as_point(v) for v in vertices]
    if not vs:
        raise EmptyInput("a weight set needs at least one vertex")
    n = len(vs[0])
    if n < 2 or any(len(v) != n for v in vs):
        raise DimensionMismatch("weight vectors must share one dimension n >= 2")
    for v in vs:
        if any(c < 0 for c in v) or sum(v, ZERO) != 1:
            raise NotInSimplex(f"{v} is not in the probability simplex")
    if symmetrize:
        vs = [apply_perm(v, p) for v in vs for p in permutations(range(n))]
    vs = tuple(sorted(set(vs)))
    return WeightSet(n, vs, _is_perm_closed(vs), approximate)


def symmetrize(W: WeightSet) -> WeightSet:
    return make_weight_set(W.vertices, symmetrize=True, approximate=W.approximate)


def _unit(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def _check_n(n):
    if not isinstance(n, int) or n < 2:
        raise BadParameter("n must be an integer >= 2")


def simplex_weights(n: int) -> WeightSet:
    _check_n(n)
    return make_weight_set([_unit(n, i) for i in range(n)])


def uniform_singleton(n: int) -> WeightSet:
    _check_n(n)
    return make_weight_set([tuple(Rat(1, n) for _ in range(n))])


def gini_weights(w) -> WeightSet:
    w = as_point(w)
    if any(c < 0 for c in w) or sum(w, ZERO) != 1:
        raise BadParameter(f"{w} is not in the probability simplex")
    return make_weight_set([w], symmetrize=True)


def blend_weights(alpha, n: int) -> WeightSet:
    """Vertices alpha*uniform + (1-alpha)*e_i of alpha{1/n} + (1-alpha)Δ."""
    _check_n(n)
    alpha = as_rat(alpha)
    if not 0 <= alpha <= 1:
        raise BadParameter("blend alpha must lie in [0, 1]")
    u = Rat(1, n)
    return make_weight_set(
        [tuple(alpha * u + (1 - alpha) * e for e in _unit(n, i)) for i in range(n)]
    )


def min_dot(W: WeightSet, v):
    if len(v) != W.n:
        raise DimensionMismatch(f"vector has {len(v)} entries, weight set has n={W.n}")
    return min(sum((a * b for a, b in zip(w, v)), ZERO) for w in W.vertices)


def _in_hull(v, others) -> bool:
    k = len(others)
    n = len(v)
    cons = [LinConstraint(tuple(ONE if j == i else ZERO for j in range(k)), ZERO, GE) for i in range(k)]
    cons.append(LinConstraint(tuple(ONE for _ in range(k)), ONE, EQ))
    for i in range(n):
        cons.append(LinConstraint(tuple(u[i] for u in others), v[i], EQ))
    return feasible_point(HPolyhedron(k, tuple(cons))) is not None


def canonicalize(W: WeightSet) -> WeightSet:
    """Drop every vertex that is a convex combination of the remaining ones."""
    keep = list(W.vertices)
    for v in list(W.vertices):
        others = [u for u in keep if u != v]
        if others and _in_hull(v, others):
            keep = others
    return WeightSet(W.n, tuple(keep), _is_perm_closed(keep), W.approximate)


# -- mean-minus-norm weight sets -------------------------------------------


def _check_norm(norm_id):
    if norm_id not in NORMS:
        raise BadNorm(f"unknown norm {norm_id!r}; expected one of {NORMS}")


def deviation_norm_sq(norm_id, y):
    """Square of the norm for l2/sd (always rational); None for sup/l1."""
    if norm_id == "l2":
        return sum((c * c for c in y), ZERO)
    if norm_id == "sd":
        return sum((c * c for c in y), ZERO) / len(y)
    return None


def deviation_norm(norm_id, y):
    """Norm of y: exact ``Rat`` when rational, else an mpmath real."""
    _check_norm(norm_id)
    if norm_id == "sup":
        return max(abs(c) for c in y)
    if norm_id == "l1":
        return sum((abs(c) for c in y), ZERO)
    sq = deviation_norm_sq(norm_id, y)
    root = rat_sqrt(sq)
    if root is not None:
        return root
    from .reals import real, sqrt

    return sqrt(real(sq))


def meannorm_is_monotone(norm_id, theta, n) -> bool:
    """Exact test of mean(x) - theta*||x - mean(x)1|| > 0 on the open orthant.

    The norm is convex and symmetric, so on the simplex its supremum is the
    vertex value ``||e_1 - 1/n||`` and is never reached at interior points.
    """
    _check_norm(norm_id)
    theta = as_rat(theta)
    dev = tuple((ONE if i == 0 else ZERO) - Rat(1, n) for i in range(n))
    if norm_id in ("sup", "l1"):
        return theta * deviation_norm(norm_id, dev) <= Rat(1, n)
    return theta * theta * deviation_norm_sq(norm_id, dev) <= Rat(1, n * n)


def _monotonicity_witness(norm_id, theta, n):
    from .reals import to_real

    eps = Rat(1, 2)
    for _ in range(200):
        x = tuple((ONE if i == 0 else ZERO) + eps for i in range(n))
        m = sum(x, ZERO) / n
        pen = to_real(deviation_norm(norm_id, tuple(c - m for c in x)))
        if to_real(m) - to_real(theta) * pen <= 0:
            return x
        eps /= 2
    return None


def _sqrt_floor(q, bits=64):
    """Rational t with t <= sqrt(q) and sqrt(q) - t < 2**-bits * (1 + sqrt(q))."""
    scale = 1 << bits
    num = q.numerator * scale * scale // q.denominator
    return Rat(isqrt(int(num)), scale)


def weight_set_from_norm(norm_id, theta, n, sample_count: int = 64, seed: int = 0) -> WeightSet:
    """Weights representing x ↦ mean(x) - theta*||x - mean(x)1||.

    The objective equals min over w = 1/n - theta*P u, u in the dual unit
    ball, P the projection onto 1^⊥. For sup and l1 the dual ball is a
    polytope and the vertex list is exact. For l2 and sd the dual ball is a
    disk; ``sample_count`` rational boundary directions are taken, giving an
    inner approximation flagged ``approximate``.
    """
    _check_norm(norm_id)
    _check_n(n)
    theta = as_rat(theta)
    if theta < 0:
        raise BadParameter("theta must be nonnegative")
    if sample_count < n:
        raise BadParameter("sample_count must be at least n")
    if not meannorm_is_monotone(norm_id, theta, n):
        x = _monotonicity_witness(norm_id, theta, n)
        raise MonotonicityViolation(
            f"mean-minus-{norm_id} objective with theta={theta} is not weakly monotone", witness=x
        )
    u = Rat(1, n)
    if norm_id == "sup":
        verts = []
        for i in range(n):
            for s in (ONE, -ONE):
                verts.append(tuple(u - theta * s * ((ONE if j == i else ZERO) - u) for j in range(n)))
        return make_weight_set(verts)
    if norm_id == "l1":
        verts = []
        for mask in range(1 << n):
            s = [ONE if mask >> j & 1 else -ONE for j in range(n)]
            ms = sum(s, ZERO) / n
            verts.append(tuple(u - theta * (sj - ms) for sj in s))
        return make_weight_set(verts)

    radius_sq = theta * theta * (ONE if norm_id == "l2" else Rat(1, n))
    rng = random.Random(seed)
    dirs = [tuple((ONE if j == i else ZERO) - u for j in range(n)) for i in range(n)]
    while len(dirs) < sample_count:
        d = [as_rat(_rat_from_float(rng.gauss(0.0, 1.0))) for _ in range(n)]
        m = sum(d, ZERO) / n
        d = tuple(c - m for c in d)
        if any(d):
            dirs.append(d)
    verts = []
    for d in dirs:
        norm_sq = sum((c * c for c in d), ZERO)
        t = _sqrt_floor(radius_sq / norm_sq) if radius_sq else ZERO
        verts.append(tuple(u - t * c for c in d))
    return make_weight_set(verts, symmetrize=True, approximate=True)


def _rat_from_float(f):
    from fractions import Fraction

    fr = Fraction(f).limit_denominator(1 << 20)
    return Rat(fr.numerator, fr.denominator)
