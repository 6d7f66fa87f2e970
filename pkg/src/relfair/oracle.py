"""Brute-force grid solver used to cross-check the exact corner solver.

The grid over each generator box ``[0, g]`` uses the multiples of ``h``
below ``g_i`` plus ``g_i`` itself, so every generator corner is a grid
point. Objectives with rational data are rescaled to integers and handed
to the grid kernel; real-valued objectives are evaluated point by point.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm

from . import kernels, reals
from ._rat import ONE, ZERO, Rat, as_rat
from .errors import BadParameter, BudgetExceeded
from .geometry import Problem, ideal_point
from .rules import (
    Rule,
    _check_rule_dim,
    _factors,
    _value,
    compare_values,
    exact_factors,
    in_choice_set,
    is_monotone,
    solve,
)

MAX_GRID_POINTS = 10**7


@dataclass(frozen=True)
class GridSpec:
    h: Rat

    def __post_init__(self):
        object.__setattr__(self, "h", as_rat(self.h))
        if self.h <= 0:
            raise BadParameter("grid spacing h must be positive")

    def axis(self, top) -> list:
        """Grid coordinates on [0, top]: multiples of h, plus top itself."""
        top = as_rat(top)
        steps = int(top // self.h)
        out = [self.h * k for k in range(steps + 1)]
        if out[-1] != top:
            out.append(top)
        return out

    def count(self, X: Problem) -> int:
        """Grid points summed over generator boxes (an upper bound on distinct points)."""
        total = 0
        for g in X.generators:
            c = 1
            for gi in g:
                c *= int(as_rat(gi) // self.h) + 2
            total += c
        return total


@dataclass(frozen=True)
class OracleResult:
    value: object
    argmax: tuple
    grid_points: int


def _den_lcm(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, int(v.denominator))
    return out


def _integer_rows(rows):
    """Rows scaled by the lcm L of their denominators: (int rows, L)."""
    L = _den_lcm(c for r in rows for c in r)
    return [[int(c * L) for c in r] for r in rows], L


def _kernel_plan(rule: Rule, n: int, f):
    """(mode, rational rows, a1, a2) for rules with a rational objective, else None."""
    k = rule.kind
    if k in ("mean_sd", "mean_norm") or not exact_factors(rule):
        return None
    unit = [[ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    inv = [[ONE / f[i] if j == i else ZERO for j in range(n)] for i in range(n)]
    if k == "relative_fair":
        return kernels.MIN, [[w[i] / f[i] for i in range(n)] for w in rule.weights.vertices], 0, 0
    if k == "ks":
        return kernels.MIN, inv, 0, 0
    if k == "egalitarian":
        return kernels.MIN, unit, 0, 0
    if k == "dictator":
        return kernels.MIN, [unit[rule.individual]], 0, 0
    if k == "relative_max":
        return kernels.MAX, inv, 0, 0
    if k == "minmax_blend":
        return kernels.BLEND, inv, rule.alpha1, rule.alpha2
    if k == "leximin":
        return kernels.LEX, inv, 0, 0
    if k == "nash":
        return kernels.PROD, [], 0, 0
    raise BadParameter(f"no grid objective for {k}")


def _solve_kernel(plan, X: Problem, grid: GridSpec):
    mode, rows, a1, a2 = plan
    n = X.n
    D = lcm(_den_lcm([grid.h]), _den_lcm(c for g in X.generators for c in g))
    irows, L = _integer_rows(rows) if rows else ([], 1)
    M = _den_lcm([as_rat(a1), as_rat(a2)]) if mode == kernels.BLEND else 1
    ia1, ia2 = int(as_rat(a1) * M), int(as_rat(a2) * M)
    best, pts = None, set()
    for g in X.generators:
        axes = [[int(v * D) for v in grid.axis(gi)] for gi in g]
        v, arg = kernels.box_argmax(axes, irows, mode, ia1, ia2)
        if best is None or v > best:
            best, pts = v, set(arg)
        elif v == best:
            pts.update(arg)
    if mode == kernels.PROD:
        value = Rat(best, D**n)
    elif mode == kernels.LEX:
        value = tuple(Rat(c, L * D) for c in best)
    else:
        value = Rat(best, M * L * D)
    points = sorted(tuple(Rat(c, D) for c in p) for p in pts)
    return value, points


def _solve_generic(rule: Rule, X: Problem, grid: GridSpec):
    f = _factors(rule, ideal_point(X))
    best, pts = None, set()
    for g in X.generators:
        for x in product(*(grid.axis(gi) for gi in g)):
            v = _value(rule, f, x)
            c = 1 if best is None else compare_values(v, best)
            if c > 0:
                best, pts = v, {x}
            elif c == 0:
                pts.add(x)
    return best, sorted(pts)


def oracle_solve(rule: Rule, X: Problem, grid: GridSpec, max_points: int = MAX_GRID_POINTS) -> OracleResult:
    """Best grid value and every grid point attaining it.

    For KS the argmax is narrowed to grid points on the ray through the
    normalizing factors, since KS selects that single point.
    """
    if rule.kind == "weak_pareto_set":
        raise BadParameter("the weak Pareto set rule has no objective to maximize")
    _check_rule_dim(rule, X.n)
    if not is_monotone(rule, X.n):
        from .errors import NonMonotoneRule

        raise NonMonotoneRule(f"{rule.label} is not weakly monotone for n={X.n}")
    count = grid.count(X)
    if count > max_points:
        raise BudgetExceeded(f"grid has up to {count} points, budget is {max_points}")
    f = _factors(rule, ideal_point(X))
    plan = _kernel_plan(rule, X.n, f)
    if plan is not None:
        value, points = _solve_kernel(plan, X, grid)
    else:
        value, points = _solve_generic(rule, X, grid)
    if rule.kind == "ks":
        points = [p for p in points if all(pi / fi == value for pi, fi in zip(p, f))]
    return OracleResult(value, tuple(points), count)


def lipschitz_bound(rule: Rule, X: Problem):
    """A sup-norm Lipschitz constant of the rule's objective on X."""
    b = ideal_point(X)
    n = X.n
    k = rule.kind
    if k in ("egalitarian", "dictator"):
        return ONE
    if k == "nash":
        total = ZERO
        for i in range(n):
            term = ONE
            for j in range(n):
                if j != i:
                    term *= b[j]
            total += term
        return total
    f = _factors(rule, b)
    if any(reals.is_real(c) for c in f):
        # b^p >= min(b, 1) for p in [0, 1]; bound 1/b^p by the rational 1/min(b, 1)
        f = tuple(min(bi, ONE) for bi in b)
    inv = max(ONE / fi for fi in f)
    if k == "relative_fair":
        return max(sum((w[i] / f[i] for i in range(n)), ZERO) for w in rule.weights.vertices)
    if k in ("ks", "relative_max", "leximin"):
        return inv
    if k == "minmax_blend":
        return (rule.alpha1 + rule.alpha2) * inv
    if k in ("mean_sd", "mean_norm"):
        # every deviation norm moves by at most 2n times the sup-norm step
        return inv * (ONE + as_rat(rule.theta) * 2 * n)
    raise BadParameter(f"no Lipschitz bound for {k}")


@dataclass(frozen=True)
class GapReport:
    exact_value: object
    oracle_value: object
    gap: object
    lipschitz: Rat
    bound: Rat
    within_bound: bool
    argmax_count: int
    argmax_chosen: bool
    not_chosen: tuple

    @property
    def ok(self) -> bool:
        return self.within_bound and self.argmax_chosen


def _gap(a, b):
    if isinstance(a, tuple):
        return max(_gap(u, v) for u, v in zip(a, b))
    if reals.is_real(a) or reals.is_real(b):
        return abs(reals.real(a) - reals.real(b))
    return abs(a - b)


def compare_oracle(rule: Rule, X: Problem, grid: GridSpec, max_points: int = MAX_GRID_POINTS) -> GapReport:
    """Compare exact and grid optima; check grid argmax points at the optimum are chosen."""
    exact = solve(rule, X).value
    res = oracle_solve(rule, X, grid, max_points)
    gap = _gap(exact, res.value)
    L = lipschitz_bound(rule, X)
    bound = L * grid.h
    within = reals.compare(gap, bound) <= 0
    bad = []
    if compare_values(res.value, exact) == 0:
        bad = [p for p in res.argmax if not in_choice_set(rule, X, p)]
    return GapReport(exact, res.value, gap, L, bound, within, len(res.argmax), not bad, tuple(bad[:10]))
