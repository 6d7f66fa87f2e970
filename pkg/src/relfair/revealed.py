"""Orderings revealed by a choice rule on two-point symmetric problems.

x R y holds when x is chosen from the symmetric comprehensive hull of
{x, y}. The equal-equivalent W(x) is the least α with α1 chosen against x.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ._rat import ONE, Rat, as_rat
from .errors import BadParameter, NonConvergence
from .geometry import as_point, scmp_hull, strictly_below
from .rules import Rule, in_choice_set

MAX_BISECTIONS = 4096


def equal_equivalent(rule: Rule, x, tol, max_iter: int = MAX_BISECTIONS):
    """Bisection estimate of W(x) = inf{α > 0 : α1 ∈ F(scmp{x, α1})}.

    Returns the midpoint of a bracket of width at most 2·tol, so the
    answer lies within ``tol`` of the infimum.
    """
    x = as_point(x)
    tol = as_rat(tol)
    if tol <= 0:
        raise BadParameter("tol must be positive")
    if any(c < 0 for c in x) or not any(x):
        raise BadParameter("x must be nonnegative and nonzero")
    n = len(x)
    lo, hi = min(x), max(x)

    def chosen(alpha):
        if alpha <= 0:
            return False
        eq = tuple(alpha for _ in range(n))
        return in_choice_set(rule, scmp_hull([x, eq]), eq)

    if chosen(lo):
        return lo
    for _ in range(max_iter):
        if hi - lo <= 2 * tol:
            return (lo + hi) / 2
        mid = (lo + hi) / 2
        if chosen(mid):
            hi = mid
        else:
            lo = mid
    raise NonConvergence(f"bisection for W{x} did not reach tol={tol} in {max_iter} steps")


def prefers(rule: Rule, x, y) -> bool:
    """x R y."""
    x, y = as_point(x), as_point(y)
    return in_choice_set(rule, scmp_hull([x, y]), x)


@dataclass(frozen=True)
class RevealedRelation:
    pairs: tuple  # of (x, y, xRy, yRx)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def complete(self) -> bool:
        return all(a or b for _, _, a, b in self.pairs)


def revealed_relation(rule: Rule, pairs) -> RevealedRelation:
    out = []
    for x, y in pairs:
        x, y = as_point(x), as_point(y)
        out.append((x, y, prefers(rule, x, y), prefers(rule, y, x)))
    return RevealedRelation(tuple(out))


@dataclass
class OrderingReport:
    checked: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)
    first_counterexample: dict = field(default_factory=dict)

    def record(self, prop: str, ok: bool, witness):
        self.checked[prop] = self.checked.get(prop, 0) + 1
        if not ok:
            self.violations[prop] = self.violations.get(prop, 0) + 1
            self.first_counterexample.setdefault(prop, witness)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())


def _random_point(rng, n, max_coord):
    return tuple(Rat(rng.randint(1, max_coord)) for _ in range(n))


def check_ordering_properties(rule: Rule, sample_spec: dict) -> OrderingReport:
    """Sampled tests of completeness, transitivity, monotonicity, symmetry, homogeneity.

    ``sample_spec`` keys: ``n`` (2), ``triples`` (100), ``seed`` (0),
    ``max_coord`` (6). Coordinates are small positive integers so that
    ties, where transitivity is most fragile, are frequent.
    """
    n = int(sample_spec.get("n", 2))
    count = int(sample_spec.get("triples", 100))
    max_coord = int(sample_spec.get("max_coord", 6))
    rng = random.Random(f"ordering:{sample_spec.get('seed', 0)}")
    rep = OrderingReport()
    for _ in range(count):
        x, y, z = (_random_point(rng, n, max_coord) for _ in range(3))
        xy, yx = prefers(rule, x, y), prefers(rule, y, x)
        rep.record("completeness", xy or yx, (x, y))
        if xy and prefers(rule, y, z):
            rep.record("transitivity", prefers(rule, x, z), (x, y, z))
        big = tuple(c + ONE for c in y)
        if strictly_below(y, big):
            rep.record("monotonicity", prefers(rule, big, y) and not prefers(rule, y, big), (big, y))
        perm = list(range(n))
        rng.shuffle(perm)
        xp = tuple(x[p] for p in perm)
        rep.record("symmetry", prefers(rule, x, xp) and prefers(rule, xp, x), (x, xp))
        a = Rat(rng.randint(1, 5), rng.randint(1, 5))
        ax, ay = tuple(a * c for c in x), tuple(a * c for c in y)
        rep.record("homogeneity", prefers(rule, ax, ay) == xy, (x, y, a))
    return rep
