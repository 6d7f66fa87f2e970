"""Comprehensive problems represented by their undominated generator corners.

A problem is ``cmp(A)`` for a finite set ``A``: the union of the boxes
``[0, g]`` over the generators ``g``. Points are plain tuples of ``Rat``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from operator import le, lt
from typing import Iterable, Sequence

from ._rat import ZERO, Rat, as_rat
from .errors import (
    BadParameter,
    DegenerateProblem,
    DimensionMismatch,
    EmptyInput,
    NonpositiveScale,
    NonpositiveShift,
    PointNotInProblem,
)

Point = tuple


def as_point(coords: Iterable) -> Point:
    return tuple(map(as_rat, coords))


def leq(x: Sequence, y: Sequence) -> bool:
    return all(map(le, x, y))


def strictly_below(x: Sequence, y: Sequence) -> bool:
    """x << y: every coordinate strictly smaller."""
    return all(map(lt, x, y))


def apply_perm(x: Sequence, perm: Sequence[int]) -> Point:
    """x^pi = (x_{pi(0)}, ..., x_{pi(n-1)}) with 0-based indices."""
    return tuple(x[p] for p in perm)


@dataclass(frozen=True)
class Problem:
    n: int
    generators: tuple

    def __iter__(self):
        return iter(self.generators)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.n, self.generators))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from ._rat import fmt_rat

        gens = ", ".join("(" + ",".join(fmt_rat(c) for c in g) + ")" for g in self.generators)
        return f"cmp{{{gens}}}"


def _maximal(points: Iterable[Point]) -> list:
    """Undominated points in ascending order.

    A point dominating p is lexicographically larger, so a descending sweep
    only has to compare p with the maximal points already kept.
    """
    keep = []
    for p in sorted(set(points), reverse=True):
        if not any(leq(p, q) for q in keep):
            keep.append(p)
    keep.reverse()
    return keep


def make_problem(points: Iterable) -> Problem:
    return _make_problem(tuple(map(as_point, points)))


@lru_cache(maxsize=65536)
def _make_problem(pts: tuple) -> Problem:
    if not pts:
        raise EmptyInput("a problem needs at least one generator")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("all generators must have the same dimension")
    if n < 2:
        raise DimensionMismatch("problems need n >= 2 individuals")
    if any(c < 0 for p in pts for c in p):
        raise BadParameter("utility vectors must be nonnegative")
    gens = _maximal(pts)
    for i in range(n):
        if all(g[i] == 0 for g in gens):
            raise DegenerateProblem(f"individual {i + 1} has b_i(X) = 0")
    return Problem(n, tuple(gens))


def scmp_hull(points: Iterable) -> Problem:
    pts = [as_point(p) for p in points]
    if not pts:
        raise EmptyInput("a problem needs at least one generator")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("all generators must have the same dimension")
    return make_problem({apply_perm(p, perm) for p in pts for perm in permutations(range(n))})


@lru_cache(maxsize=65536)
def ideal_point(X: Problem) -> Point:
    return tuple(max(g[i] for g in X.generators) for i in range(X.n))


def _check_dim(X: Problem, x: Sequence):
    if len(x) != X.n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, problem has n={X.n}")


def contains(X: Problem, x: Sequence) -> bool:
    _check_dim(X, x)
    if any(c < 0 for c in x):
        return False
    return any(leq(x, g) for g in X.generators)


def scale(X: Problem, a: Sequence) -> Problem:
    a = as_point(a)
    _check_dim(X, a)
    if any(c <= 0 for c in a):
        raise NonpositiveScale("scale factors must be strictly positive")
    return make_problem(tuple(ai * gi for ai, gi in zip(a, g)) for g in X.generators)


def translate_cmp(X: Problem, alpha) -> Problem:
    """cmp(X + alpha*1)."""
    alpha = as_rat(alpha)
    if alpha <= 0:
        raise NonpositiveShift("shift must be strictly positive")
    return make_problem(tuple(c + alpha for c in g) for g in X.generators)


def permute(X: Problem, perm: Sequence[int]) -> Problem:
    if sorted(perm) != list(range(X.n)):
        raise BadParameter(f"{perm!r} is not a permutation of 0..{X.n - 1}")
    return make_problem(apply_perm(g, perm) for g in X.generators)


def is_weak_pareto(X: Problem, x: Sequence) -> bool:
    x = as_point(x)
    if not contains(X, x):
        raise PointNotInProblem(f"{x} is not in {X}")
    return not any(strictly_below(x, g) for g in X.generators)


def is_strong_pareto(X: Problem, x: Sequence) -> bool:
    x = as_point(x)
    if not contains(X, x):
        raise PointNotInProblem(f"{x} is not in {X}")
    return not any(leq(x, g) and g != x for g in X.generators)


def is_symmetric(X: Problem) -> bool:
    gens = set(X.generators)
    return all(apply_perm(g, perm) in gens for g in gens for perm in permutations(range(X.n)))


def is_equal_able(X: Problem) -> bool:
    return len(set(ideal_point(X))) == 1


def _dist_to(x: Sequence, Y: Problem):
    # sup-norm distance from x >= 0 to the box union Y
    return min(max(max(xi - gi, ZERO) for xi, gi in zip(x, g)) for g in Y.generators)


def hausdorff_upper(X: Problem, Y: Problem, h=None):
    """Sup-norm Hausdorff distance between two problems.

    Distance to a comprehensive set is nondecreasing along <=, so both
    one-sided suprema are attained at generator corners and the value is
    exact. ``h`` is accepted for interface compatibility and must be > 0.
    """
    if X.n != Y.n:
        raise DimensionMismatch("problems differ in dimension")
    if h is not None and as_rat(h) <= 0:
        raise BadParameter("grid spacing must be positive")
    return max(max(_dist_to(g, Y) for g in X.generators), max(_dist_to(g, X) for g in Y.generators))


@lru_cache(maxsize=16384)
def weak_pareto_boxes(X: Problem) -> tuple:
    """The weak Pareto set of X as a tuple of closed boxes ``(lo, hi)``.

    Removing an open box ``{x << g}`` from a closed box leaves the union of
    the closed boxes ``{x_i >= g_i}``, so the result is exact.
    """
    out = []
    n = X.n
    for h in X.generators:
        pieces = [(tuple(ZERO for _ in h), h)]
        for g in X.generators:
            nxt = []
            for lo, hi in pieces:
                if not strictly_below(lo, g):
                    nxt.append((lo, hi))
                    continue
                for i in range(n):
                    if g[i] <= hi[i]:
                        nxt.append((lo[:i] + (g[i],) + lo[i + 1:], hi))
            pieces = _prune_boxes(nxt)
        out.extend(pieces)
    return tuple(_prune_boxes(out))


def _prune_boxes(boxes):
    boxes = sorted(set(boxes))
    if len(boxes) < 2:
        return boxes
    keep = []
    for b in boxes:
        lo, hi = b
        for c in boxes:
            if c is not b and leq(c[0], lo) and leq(hi, c[1]):
                break
        else:
            keep.append(b)
    return keep

