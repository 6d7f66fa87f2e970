"""Choice rules and their exact choice sets.

Every implemented objective is nondecreasing along <= (mean-minus-norm
rules only under their monotonicity condition), so the maximum over a
union of boxes is attained at a generator corner. For piecewise-linear
concave objectives the argmax set is returned as polyhedral pieces
``[0, g] ∩ {objective >= value}``, one per optimal corner.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import reals
from ._rat import ONE, ZERO, Rat, as_rat, fmt_rat
from .errors import BadParameter, NonMonotoneRule, PointNotInProblem, PrecisionUnavailable
from .geometry import Problem, as_point, contains, ideal_point, is_weak_pareto, weak_pareto_boxes
from .lp import GE, HPolyhedron, LinConstraint, box
from .polyhedra import contains_point, point_poly
from .weights import NORMS, WeightSet, deviation_norm, meannorm_is_monotone, min_dot

KINDS = (
    "relative_fair",
    "ks",
    "nash",
    "leximin",
    "relative_max",
    "egalitarian",
    "dictator",
    "weak_pareto_set",
    "mean_sd",
    "mean_norm",
    "minmax_blend",
)

# objectives written in raw utilities; p does not apply
_RAW = ("nash", "egalitarian", "dictator", "weak_pareto_set")
EXACT, CORNER_WITNESS = "exact", "corner_witness"


@dataclass(frozen=True)
class Rule:
    kind: str
    weights: Optional[WeightSet] = None
    theta: Optional[Rat] = None
    norm: Optional[str] = None
    alpha1: Optional[Rat] = None
    alpha2: Optional[Rat] = None
    individual: int = 0
    p: Rat = ONE

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParameter(f"unknown rule kind {self.kind!r}")
        if not 0 <= self.p <= 1:
            raise BadParameter("responsibility exponent p must lie in [0, 1]")
        if self.kind == "relative_fair":
            if self.weights is None:
                raise BadParameter("relative_fair needs a weight set")
            if not self.weights.symmetric:
                raise BadParameter("relative_fair needs a symmetric weight set")
        if self.kind in ("mean_sd", "mean_norm"):
            if self.theta is None or self.theta < 0:
                raise BadParameter("theta must be a nonnegative rational")
        if self.kind == "mean_norm" and self.norm not in NORMS:
            raise BadParameter(f"mean_norm needs norm in {NORMS}")
        if self.kind == "minmax_blend":
            if self.alpha1 is None or self.alpha2 is None or self.alpha1 <= 0 or self.alpha2 <= 0:
                raise BadParameter("minmax_blend needs alpha1, alpha2 > 0")
            if self.alpha1 == self.alpha2:
                raise BadParameter("minmax_blend needs alpha1 != alpha2")
        if self.individual < 0:
            raise BadParameter("dictator index must be nonnegative")

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.key)
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def key(self) -> str:
        """Canonical text form, independent of the rational backend."""
        k = self.__dict__.get("_key")
        if k is None:
            k = self._make_key()
            object.__setattr__(self, "_key", k)
        return k

    def _make_key(self) -> str:
        parts = [self.kind, "p=" + fmt_rat(self.p)]
        if self.weights is not None:
            parts.append("W=" + repr(self.weights))
        for name in ("theta", "alpha1", "alpha2"):
            v = getattr(self, name)
            if v is not None:
                parts.append(f"{name}={fmt_rat(v)}")
        if self.norm is not None:
            parts.append("norm=" + self.norm)
        if self.kind == "dictator":
            parts.append(f"i={self.individual + 1}")
        return "|".join(parts)

    @property
    def label(self) -> str:
        if self.kind == "relative_fair":
            return f"relative_fair{self.weights!r}"
        return self.kind


# -- constructors -----------------------------------------------------------


def relative_fair(W: WeightSet, p=1) -> Rule:
    return Rule("relative_fair", weights=W, p=as_rat(p))


def ks(p=1) -> Rule:
    return Rule("ks", p=as_rat(p))


def nash() -> Rule:
    return Rule("nash")


def leximin(p=1) -> Rule:
    return Rule("leximin", p=as_rat(p))


def relative_max(p=1) -> Rule:
    return Rule("relative_max", p=as_rat(p))


def egalitarian() -> Rule:
    return Rule("egalitarian")


def dictator(i: int = 1) -> Rule:
    """Dictatorship of individual ``i`` (1-based, as in the usual notation)."""
    return Rule("dictator", individual=i - 1)


def weak_pareto_set() -> Rule:
    return Rule("weak_pareto_set")


def mean_sd(theta, p=1) -> Rule:
    return Rule("mean_sd", theta=as_rat(theta), p=as_rat(p))


def mean_norm(norm_id, theta, p=1) -> Rule:
    return Rule("mean_norm", norm=norm_id, theta=as_rat(theta), p=as_rat(p))


def minmax_blend(alpha1, alpha2, p=1) -> Rule:
    return Rule("minmax_blend", alpha1=as_rat(alpha1), alpha2=as_rat(alpha2), p=as_rat(p))


# -- evaluation -------------------------------------------------------------


def _factors(rule: Rule, b):
    """b_i^p, exact when p is 0 or 1."""
    if rule.p == 1:
        return tuple(b)
    if rule.p == 0:
        return tuple(ONE for _ in b)
    return tuple(reals.power(bi, rule.p) for bi in b)


def exact_factors(rule: Rule) -> bool:
    return rule.kind in _RAW or rule.p in (0, 1)


def _normalized(x, f):
    if any(reals.is_real(v) for v in f):
        return tuple(reals.real(xi) / fi for xi, fi in zip(x, f))
    return tuple(xi / fi for xi, fi in zip(x, f))


def _mean_dev(rule: Rule, xt):
    n = len(xt)
    if any(reals.is_real(v) for v in xt):
        m = sum(xt) / n
        dev = [v - m for v in xt]
        norm_id = "sd" if rule.kind == "mean_sd" else rule.norm
        if norm_id == "sup":
            pen = max(abs(v) for v in dev)
        elif norm_id == "l1":
            pen = sum(abs(v) for v in dev)
        else:
            sq = sum(v * v for v in dev)
            pen = reals.sqrt(sq / n if norm_id == "sd" else sq)
        return m - reals.real(rule.theta) * pen
    m = sum(xt, ZERO) / n
    dev = tuple(v - m for v in xt)
    pen = deviation_norm("sd" if rule.kind == "mean_sd" else rule.norm, dev)
    if reals.is_real(pen):
        return reals.real(m) - reals.real(rule.theta) * pen
    return m - rule.theta * pen


def _value(rule: Rule, f, x):
    k = rule.kind
    if k == "nash":
        out = ONE
        for c in x:
            out *= c
        return out
    if k == "egalitarian":
        return min(x)
    if k == "dictator":
        return x[rule.individual]
    if k == "weak_pareto_set":
        raise BadParameter("the weak Pareto set rule has no welfare function")
    xt = _normalized(x, f)
    real = any(reals.is_real(v) for v in xt)
    if k in ("ks",):
        return min(xt)
    if k == "relative_fair":
        if real:
            return min(sum(reals.real(w) * v for w, v in zip(wv, xt)) for wv in rule.weights.vertices)
        return min_dot(rule.weights, xt)
    if k == "leximin":
        return tuple(sorted(xt))
    if k == "relative_max":
        return max(xt)
    if k == "minmax_blend":
        a1, a2 = rule.alpha1, rule.alpha2
        if real:
            a1, a2 = reals.real(a1), reals.real(a2)
        return a1 * min(xt) + a2 * max(xt)
    return _mean_dev(rule, xt)


def _check_rule_dim(rule: Rule, n: int):
    from .errors import DimensionMismatch

    if rule.kind == "relative_fair" and rule.weights.n != n:
        raise DimensionMismatch(f"weight set has n={rule.weights.n}, problem has n={n}")
    if rule.kind == "dictator" and rule.individual >= n:
        raise DimensionMismatch(f"dictator {rule.individual + 1} does not exist for n={n}")


def evaluate(rule: Rule, X: Problem, x):
    """Welfare of x in context X on the normalized vector x_i / b_i(X)^p.

    Rational for every rule except where a square root or b^p is
    irrational (then an mpmath real at 128 bits). Leximin returns the
    ascending sorted normalized vector, compared lexicographically.
    """
    x = as_point(x)
    if not contains(X, x):
        raise PointNotInProblem(f"{x} is not in {X}")
    _check_rule_dim(rule, X.n)
    return _value(rule, _factors(rule, ideal_point(X)), x)


def compare_values(a, b) -> int:
    if isinstance(a, tuple):
        for u, v in zip(a, b):
            c = reals.compare(u, v)
            if c:
                return c
        return 0
    return reals.compare(a, b)


def is_monotone(rule: Rule, n: int) -> bool:
    if rule.kind == "mean_sd":
        return meannorm_is_monotone("sd", rule.theta, n)
    if rule.kind == "mean_norm":
        return meannorm_is_monotone(rule.norm, rule.theta, n)
    return True


@dataclass(frozen=True)
class MonotonicityWitness:
    """``higher`` dominates ``lower`` coordinatewise, yet the objective prefers ``lower``."""

    higher: tuple
    lower: tuple
    higher_value: object
    lower_value: object


def monotonicity_witness(rule: Rule, n: int, max_steps: int = 64) -> Optional[MonotonicityWitness]:
    """A pair x >> y with objective(y) > objective(x) at unit abilities, or None.

    Candidates are x = (2, ..., 2, 2 + 2^j), pushing x toward the simplex
    vertex where the penalty term is largest. For a failing x the
    equal point t·1 is lowered from min(x) by halving steps until its
    value t beats the objective at x.
    """
    if is_monotone(rule, n):
        return None
    unit = tuple(ONE for _ in range(n))
    two = Rat(2)
    for j in range(1, max_steps + 1):
        x = tuple(two for _ in range(n - 1)) + (two + Rat(2) ** j,)
        vx = _value(rule, unit, x)
        if compare_values(vx, two) >= 0:
            continue
        for k in range(1, max_steps + 1):
            t = two * (1 - Rat(1, 2**k))
            y = tuple(t for _ in range(n))
            vy = _value(rule, unit, y)
            if compare_values(vy, vx) > 0:
                return MonotonicityWitness(x, y, vx, vy)
    return None


# -- choice sets ------------------------------------------------------------


@dataclass(frozen=True)
class ChoiceSet:
    value: object
    witnesses: tuple
    pieces: Optional[tuple]
    mode: str
    complete: bool = False

    def exact_pieces(self):
        """Pieces whose union is exactly F(X), or None if only a predicate is known."""
        if self.pieces is not None:
            return self.pieces
        if self.complete:
            return tuple(point_poly(w) for w in self.witnesses)
        return None


def _level_piece(g, rows, value):
    """[0, g] ∩ {r·x >= value for r in rows}."""
    zero = tuple(ZERO for _ in g)
    rows = [tuple(r) for r in rows]
    lo = list(zero)
    if type(value) is not Rat or any(type(c) is not Rat for r in rows for c in r):
        return box(zero, g).with_constraints(LinConstraint(r, value, GE) for r in rows)
    for r in rows:
        nz = [i for i, c in enumerate(r) if c]
        if len(nz) != 1 or r[nz[0]] < 0:
            return box(zero, g).with_constraints(LinConstraint(r, value, GE) for r in rows)
        i = nz[0]
        lo[i] = max(lo[i], value / r[i])
    # every row bounds a single coordinate from below, so the piece is a box
    return box(lo, g)


def _pieces(rule: Rule, f, g, value):
    n = len(g)
    k = rule.kind
    unit = [tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)]
    inv = [tuple((ONE / f[i]) if j == i else ZERO for j in range(n)) for i in range(n)]
    if k == "relative_fair":
        rows = [tuple(w[i] / f[i] for i in range(n)) for w in rule.weights.vertices]
        return [_level_piece(g, rows, value)]
    if k == "egalitarian":
        return [_level_piece(g, unit, value)]
    if k == "dictator":
        return [_level_piece(g, [unit[rule.individual]], value)]
    if k == "relative_max":
        return [_level_piece(g, [inv[j]], value) for j in range(n)]
    if k == "minmax_blend":
        out = []
        for j in range(n):
            rows = []
            for i in range(n):
                rows.append(tuple(rule.alpha1 * inv[i][t] + rule.alpha2 * inv[j][t] for t in range(n)))
            out.append(_level_piece(g, rows, value))
        return out
    raise AssertionError(k)


_PIECEWISE_LINEAR = ("relative_fair", "egalitarian", "dictator", "relative_max", "minmax_blend")


@lru_cache(maxsize=65536)
def optimum(rule: Rule, X: Problem) -> tuple:
    """(factors, optimal value, optimal generator corners) by corner maximization."""
    _check_rule_dim(rule, X.n)
    if rule.kind in ("weak_pareto_set", "ks"):
        raise BadParameter(f"{rule.kind} is not a corner-maximization rule")
    if not is_monotone(rule, X.n):
        raise NonMonotoneRule(f"{rule.label} is not weakly monotone for n={X.n}; corner maximization is unsound")
    f = _factors(rule, ideal_point(X))
    vals = [(_value(rule, f, g), g) for g in X.generators]
    best = vals[0][0]
    for v, _ in vals[1:]:
        if compare_values(v, best) > 0:
            best = v
    return f, best, tuple(g for v, g in vals if compare_values(v, best) == 0)


@lru_cache(maxsize=16384)
def solve(rule: Rule, X: Problem) -> ChoiceSet:
    """F(X): optimal value, optimal corners, and exact pieces where available."""
    _check_rule_dim(rule, X.n)
    b = ideal_point(X)
    if rule.kind == "weak_pareto_set":
        pieces = tuple(box(lo, hi) for lo, hi in weak_pareto_boxes(X))
        return ChoiceSet(None, X.generators, pieces, EXACT)
    if rule.kind == "ks":
        if not exact_factors(rule):
            raise PrecisionUnavailable("the KS point is irrational for this exponent p")
        f = _factors(rule, b)
        lam = max(min(gi / fi for gi, fi in zip(g, f)) for g in X.generators)
        pt = tuple(lam * fi for fi in f)
        return ChoiceSet(lam, (pt,), (point_poly(pt),), EXACT, True)
    f, best, wits = optimum(rule, X)
    if reals.is_real(best) or (isinstance(best, tuple) and any(reals.is_real(c) for c in best)):
        return ChoiceSet(best, wits, None, CORNER_WITNESS)
    if rule.kind in _PIECEWISE_LINEAR and exact_factors(rule):
        pieces = []
        for g in wits:
            for P in _pieces(rule, f, g, best):
                if contains_point(P, g):
                    pieces.append(P)
        return ChoiceSet(best, wits, tuple(pieces), EXACT)
    if rule.kind == "leximin":
        # x <= g with the same sorted vector forces x = g: the optimal corners are all of F(X)
        return ChoiceSet(best, wits, None, CORNER_WITNESS, True)
    if rule.kind == "nash":
        if best == 0:
            # every corner has a zero coordinate, so the product vanishes on all of X
            zero = tuple(ZERO for _ in range(X.n))
            return ChoiceSet(best, wits, tuple(box(zero, g) for g in X.generators), EXACT, True)
        return ChoiceSet(best, wits, None, CORNER_WITNESS, True)
    return ChoiceSet(best, wits, None, CORNER_WITNESS)


def relative_maximin_solve(X: Problem) -> ChoiceSet:
    """Closed form for W = Δ: pieces [0, g] ∩ {x >= λ b(X)}, λ = max_g min_i g_i/b_i."""
    b = ideal_point(X)
    lam = max(min(gi / bi for gi, bi in zip(g, b)) for g in X.generators)
    floor = tuple(lam * bi for bi in b)
    wits = tuple(g for g in X.generators if all(gi >= fi for gi, fi in zip(g, floor)))
    pieces = tuple(box(floor, g) for g in wits)
    return ChoiceSet(lam, wits, pieces, EXACT)


def in_choice_set(rule: Rule, X: Problem, x) -> bool:
    x = as_point(x)
    if len(x) != X.n or not contains(X, x):
        return False
    if rule.kind == "weak_pareto_set":
        return is_weak_pareto(X, x)
    cs = solve(rule, X)
    if rule.kind == "ks":
        return x == cs.witnesses[0]
    return compare_values(evaluate(rule, X, x), cs.value) == 0
