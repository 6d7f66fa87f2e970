"""Random instances, violation search and the independence matrix.

Every instance is drawn from its own ``random.Random`` seeded by the text
``"{seed}:{rule}:{axiom}:{index}"``. Results therefore do not depend on
evaluation order, so the optional process pool (``RELFAIR_THREADS``)
returns byte-identical reports.

Sampled problems have strictly positive generator coordinates, so every
problem contains a point with all utilities positive.
"""
from __future__ import annotations

import gc
import os
import random
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from ._rat import ONE, ZERO, Rat
from .axioms import (
    INCONCLUSIVE,
    PASS,
    RELATIVE_FAIR_AXIOMS,
    VIOLATION,
    AxiomId,
    Instance,
    SequenceSpec,
    Verdict,
    _view,
    check_axiom,
    membership,
    IN,
)
from .errors import BadParameter
from .geometry import Problem, contains, ideal_point, make_problem, scmp_hull
from .rules import Rule, dictator, egalitarian, ks, leximin, nash, relative_max, solve, weak_pareto_set

DEFAULT_RANGE = (1, 6)
CONTINUITY_KS = (100, 1000, 10000, 100000)


# -- problem generators -----------------------------------------------------


def _coord(rng, lo, hi, den=2):
    while True:
        # same draw as rng.randint(lo * den, hi * den) without its argument checks
        v = Rat(lo * den + rng._randbelow((hi - lo) * den + 1), den)
        if v > 0 or lo == 0:
            return v


def _point(rng, n, lo, hi):
    return tuple(_coord(rng, lo, hi) for _ in range(n))


def _check_gen_args(n, max_gens, coord_range):
    lo, hi = coord_range
    if n < 2 or max_gens < 1 or lo < 0 or hi <= 0 or hi < lo:
        raise BadParameter("need n >= 2, max_gens >= 1 and 0 <= lo <= hi with hi > 0")
    return lo, hi


def _rand_problem(rng, n, max_gens, lo, hi):
    while True:
        pts = [_point(rng, n, lo, hi) for _ in range(rng.randint(1, max_gens))]
        if all(any(p[i] > 0 for p in pts) for i in range(n)):
            return make_problem(pts)


def _equalize(rng, points, lo):
    """Add points so that every coordinate reaches the overall maximum."""
    pts = [tuple(p) for p in points]
    top = max(max(p) for p in pts)
    n = len(pts[0])
    for i in range(n):
        if max(p[i] for p in pts) < top:
            base = rng.choice(pts)
            pts.append(tuple(top if k == i else base[k] for k in range(n)))
    return make_problem(pts)


def _rand_equal_able(rng, n, max_gens, lo, hi):
    pts = [_point(rng, n, max(lo, 1), hi) for _ in range(rng.randint(1, max_gens))]
    if rng.random() < 0.5:
        return scmp_hull(pts)
    return _equalize(rng, pts, lo)


def _rand_symmetric(rng, n, max_gens, lo, hi):
    return scmp_hull([_point(rng, n, max(lo, 1), hi) for _ in range(rng.randint(1, max_gens))])


def random_problem(n: int, max_gens: int, coord_range=DEFAULT_RANGE, seed=0) -> Problem:
    lo, hi = _check_gen_args(n, max_gens, coord_range)
    return _rand_problem(random.Random(f"problem:{seed}"), n, max_gens, lo, hi)


def random_equal_able(n: int, max_gens: int, coord_range=DEFAULT_RANGE, seed=0) -> Problem:
    lo, hi = _check_gen_args(n, max_gens, coord_range)
    return _rand_equal_able(random.Random(f"equal:{seed}"), n, max_gens, lo, hi)


def random_symmetric(n: int, max_gens: int, coord_range=DEFAULT_RANGE, seed=0) -> Problem:
    lo, hi = _check_gen_args(n, max_gens, coord_range)
    return _rand_symmetric(random.Random(f"symmetric:{seed}"), n, max_gens, lo, hi)


def _shrink(rng, g):
    return tuple(c * Rat(rng.randint(1, 4), 4) for c in g)


def _rand_subproblem(rng, X: Problem, equal_able: bool, keep=()):
    gens = list(X.generators)
    chosen = rng.sample(gens, rng.randint(1, len(gens)))
    pts = [_shrink(rng, g) if rng.random() < 0.7 else g for g in chosen] + list(keep)
    if not equal_able:
        return make_problem(pts)
    top = max(max(p) for p in pts)
    b = ideal_point(X)
    for i in range(X.n):
        if max(p[i] for p in pts) < top:
            g = next(g for g in gens if g[i] == b[i])
            q = _shrink(rng, g)
            pts.append(tuple(top if k == i else min(q[k], top) for k in range(X.n)))
    return make_problem(pts)


def random_subproblem(X: Problem, seed=0, equal_able: bool = False) -> Problem:
    """A problem contained in X, equal-able when requested (X must then be equal-able)."""
    if equal_able and len(set(ideal_point(X))) != 1:
        raise BadParameter("an equal-able subproblem needs an equal-able X")
    return _rand_subproblem(random.Random(f"sub:{seed}"), X, equal_able)


# -- continuity families ----------------------------------------------------


@dataclass(frozen=True)
class ProblemFamily:
    """Problems X^k with their generators listed in a fixed order, and the limit."""

    ks: tuple
    raw: tuple  # per k: tuple of generator points, aligned across k
    limit_raw: tuple

    @property
    def problems(self):
        return tuple(make_problem(r) for r in self.raw)

    @property
    def limit(self):
        return make_problem(self.limit_raw)


def _family(gens, move, ks=CONTINUITY_KS):
    """``move(g, t)`` gives the generator at parameter t = 1/k; t = 0 is the limit."""
    raw = tuple(tuple(move(g, Rat(1, k)) for g in gens) for k in ks)
    return ProblemFamily(tuple(ks), raw, tuple(move(g, ZERO) for g in gens))


def lexicographic_fixture(n: int = 2, c=1) -> ProblemFamily:
    """scmp{c·1, (c − t, 2c, …, 2c)} as t = 1/k → 0: a tie in the smallest share appears in the limit."""
    c = Rat(c)
    base = [tuple(c for _ in range(n)), tuple(c if i == 0 else 2 * c for i in range(n))]
    gens = sorted({tuple(p[q] for q in perm) for p in base for perm in permutations(range(n))})

    def move(g, t):
        return tuple(v - t if v == c and max(g) == 2 * c else v for v in g)

    return _family(gens, move)


def _rand_family(rng, n, lo=1, hi=6, kind=None):
    kind = kind or rng.choice(("grow", "shrink", "diagonal", "shift", "perturb"))
    if kind == "shift":
        X = _rand_equal_able(rng, n, 3, lo, hi)
    else:
        X = _rand_problem(rng, n, 3, lo, hi)
    gens = X.generators
    if kind == "grow":
        return _family(gens, lambda g, t: tuple(c * (1 + t) for c in g))
    if kind == "shrink":
        return _family(gens, lambda g, t: tuple(c * (1 - t) for c in g))
    if kind == "diagonal":
        d = tuple(rng.randint(0, 3) for _ in range(n))
        return _family(gens, lambda g, t: tuple(c * (1 + di * t) for c, di in zip(g, d)))
    if kind == "shift":
        return _family(gens, lambda g, t: tuple(c + t for c in g))
    dirs = {g: tuple(rng.randint(0, 2) for _ in range(n)) for g in gens}
    return _family(gens, lambda g, t: tuple(c - di * t for c, di in zip(g, dirs[g])))


@lru_cache(maxsize=16)
def continuity_fixtures(n: int = 2, count: int = 50) -> tuple:
    """Deterministic continuity fixtures: lexicographic-tie families plus stable families."""
    out = [lexicographic_fixture(n, c) for c in (1, 2, Rat(1, 2))]
    rng = random.Random(f"continuity-fixtures:{n}")
    kinds = ("grow", "shrink", "diagonal", "shift")
    while len(out) < count:
        out.append(_rand_family(rng, n, kind=kinds[len(out) % len(kinds)]))
    return tuple(out)


@lru_cache(maxsize=4096)
def sequence_for(rule: Rule, fam: ProblemFamily):
    """Attach chosen points to a family, or return None.

    Uses the first generator index whose corner is chosen at every k; its
    limit corner is the limit point. For KS the chosen point is unique and
    its limit is taken as the KS point of the limit problem.
    """
    problems, limit = fam.problems, fam.limit
    if rule.kind == "ks":
        pts = tuple(solve(rule, P).witnesses[0] for P in problems)
        return SequenceSpec(fam.ks, problems, pts, limit, solve(rule, limit).witnesses[0])
    for j in range(len(fam.limit_raw)):
        if all(membership(rule, P, r[j]) == IN for P, r in zip(problems, fam.raw)):
            pts = tuple(r[j] for r in fam.raw)
            return SequenceSpec(fam.ks, problems, pts, limit, fam.limit_raw[j])
    return None


# -- per-axiom instance generators ------------------------------------------


def _dims(rule: Rule, axiom: AxiomId):
    if rule.kind == "relative_fair":
        return rule.weights.n
    if axiom == AxiomId.SEPARABILITY_EAI and rule.kind != "minmax_blend":
        return 3
    return None


def _pick_n(rng, rule, axiom):
    n = _dims(rule, axiom)
    if n is not None:
        return n
    if rule.kind == "minmax_blend":
        return 2
    return 2 if rng.random() < 0.75 else 3


def _from_view(rng, rule, X):
    return rng.choice(_view(rule, X).candidates)


@lru_cache(maxsize=1)
def _small_corpus() -> dict:
    """Smallest two-person instances, tried before any random draw so that witnesses come out minimal."""
    unit, sym = make_problem([(1, 1)]), scmp_hull([(1, 2)])
    tiny = (unit, sym, make_problem([(1, 2)]), make_problem([(2, 1)]))
    pareto = tuple(Instance(X=X) for X in tiny)
    return {
        AxiomId.WEAK_PARETO: pareto,
        AxiomId.STRONG_PARETO: pareto,
        AxiomId.INTERMEDIATE_PARETO: pareto,
        AxiomId.SCALE_INVARIANCE: (Instance(X=sym, a=(2, 1)), Instance(X=unit, a=(2, 1))),
        AxiomId.ANONYMITY: (Instance(X=sym, perm=(1, 0)),),
        AxiomId.STRONG_SYMMETRY: (Instance(X=unit), Instance(X=sym)),
    }


def generate_instance(rule: Rule, axiom, rng, index: int = 0) -> Instance:
    axiom = AxiomId(axiom)
    corpus = _small_corpus().get(axiom, ())
    if index < len(corpus) and _dims(rule, axiom) in (None, 2):
        return corpus[index]
    n = _pick_n(rng, rule, axiom)
    lo, hi = DEFAULT_RANGE
    if axiom in (AxiomId.WEAK_PARETO, AxiomId.STRONG_PARETO, AxiomId.INTERMEDIATE_PARETO):
        return Instance(X=_rand_problem(rng, n, 3, lo, hi))
    if axiom == AxiomId.SCALE_INVARIANCE:
        a = tuple(Rat(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(n))
        return Instance(X=_rand_problem(rng, n, 3, lo, hi), a=a)
    if axiom == AxiomId.ANONYMITY:
        perm = list(range(n))
        while perm == sorted(perm):
            rng.shuffle(perm)
        return Instance(X=_rand_symmetric(rng, n, 2, lo, hi), perm=tuple(perm))
    if axiom == AxiomId.STRONG_SYMMETRY:
        return Instance(X=_rand_symmetric(rng, n, 2, lo, hi))
    if axiom == AxiomId.CONTRACTION_EAI:
        X = _rand_equal_able(rng, n, 3, lo, hi)
        keep = (_from_view(rng, rule, X),) if rng.random() < 0.8 else ()
        return Instance(X=X, X2=_rand_subproblem(rng, X, True, keep))
    if axiom == AxiomId.EQUAL_ADDITION_EAI:
        X = _rand_equal_able(rng, n, 3, lo, hi)
        alpha = Rat(rng.randint(1, 8), rng.randint(1, 2))
        x = None
        if rng.random() < 0.5:
            x = _from_view(rng, rule, X) if rng.random() < 0.5 else _shrink(rng, rng.choice(X.generators))
        return Instance(X=X, alpha=alpha, x=x)
    if axiom == AxiomId.COMPROMISABILITY_EAI:
        X = _rand_equal_able(rng, n, 3, lo, hi)
        cands = _view(rule, X).candidates
        for _ in range(8):
            x, y = rng.choice(cands), rng.choice(cands)
            alpha = Rat(rng.randint(0, 4), 4)
            if contains(X, tuple(alpha * p + (1 - alpha) * q for p, q in zip(x, y))):
                return Instance(X=X, x=x, y=y, alpha=alpha)
        return Instance(X=X, x=cands[0], y=cands[0], alpha=Rat(1, 2))
    if axiom == AxiomId.HAMMOND_EAI:
        i, j = rng.sample(range(n), 2)
        vals = sorted(rng.sample(range(1, 4 * hi + 1), 4))
        x, y = list(_point(rng, n, lo, hi)), None
        y = list(x)
        x[i], y[i], y[j], x[j] = (Rat(v, 4) for v in vals)
        extras = [_point(rng, n, lo, hi) for _ in range(rng.randint(0, 2))]
        pts = [tuple(x), tuple(y)] + extras
        X = scmp_hull(pts) if rng.random() < 0.5 else _equalize(rng, pts, lo)
        return Instance(X=X, x=x, y=y, i=i, j=j)
    if axiom == AxiomId.SEPARABILITY_EAI:
        M = tuple(k for k in range(n) if rng.random() < 0.5)
        if not 0 < len(M) < n:
            M = (rng.randrange(n),)
        x, y = _point(rng, n, lo, hi), _point(rng, n, lo, hi)
        u = tuple(y[k] if k in M else x[k] for k in range(n))
        v = tuple(x[k] if k in M else y[k] for k in range(n))

        def eq(pts):
            pts = pts + [_point(rng, n, lo, hi) for _ in range(rng.randint(0, 1))]
            return scmp_hull(pts) if rng.random() < 0.5 else _equalize(rng, pts, lo)

        return Instance(X=eq([x, u]), X2=eq([v, y]), x=x, y=y, M=M)
    if axiom == AxiomId.CONTINUITY:
        fixtures = continuity_fixtures(n)
        fam = fixtures[index] if index < len(fixtures) else _rand_family(rng, n)
        # sequence None: the family has no consistently chosen corner
        return Instance(sequence=sequence_for(rule, fam))
    raise BadParameter(f"no generator for {axiom}")


# -- search -----------------------------------------------------------------


def _seed_prefix(seed, rule: Rule, axiom: AxiomId) -> str:
    return f"{seed}:{rule.key}:{axiom.value}:"


def _run_one(rule, axiom, seed, index, prefix=None):
    prefix = prefix or _seed_prefix(seed, rule, axiom)
    inst = generate_instance(rule, axiom, random.Random(prefix + str(index)), index)
    if axiom == AxiomId.CONTINUITY and inst.sequence is None:
        return Verdict(INCONCLUSIVE, axiom.value, Instance(), "no consistently chosen corner along the family")
    return check_axiom(rule, axiom, inst)


@contextmanager
def _paused_gc():
    """Pause cyclic collection while searching.

    The search creates almost no reference cycles, but the memo caches hold
    millions of long-lived objects that each older-generation collection
    would traverse again. Collection resumes when the search range ends.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _run_range(args):
    rule, axiom, seed, start, stop = args
    statuses = []
    prefix = _seed_prefix(seed, rule, axiom)
    with _paused_gc():
        for index in range(start, stop):
            v = _run_one(rule, axiom, seed, index, prefix)
            statuses.append(v.status)
            if v.violated:
                return statuses, index, v
    return statuses, None, None


def threads() -> int:
    try:
        return max(1, int(os.environ.get("RELFAIR_THREADS", "1")))
    except ValueError:
        return 1


def _chunks(budget, size):
    return [(s, min(s + size, budget)) for s in range(0, budget, size)]


def clear_caches():
    """Drop memoized solutions; large stale caches slow later searches down."""
    from . import axioms, geometry, lp, polyhedra, rules

    for f in (
        geometry._make_problem, geometry.ideal_point, geometry.weak_pareto_boxes, lp._box, polyhedra._vertices,
        rules.optimum, rules.solve, axioms._membership, axioms._view, axioms.check_axiom,
        sequence_for,
    ):
        f.cache_clear()


def search_violation(rule: Rule, axiom, budget: int, seed: int = 0, workers: int = None) -> Verdict:
    """First violating instance in index order, else a summary Pass/Inconclusive verdict."""
    axiom = AxiomId(axiom)
    if budget <= 0:
        raise BadParameter("budget must be positive")
    clear_caches()
    workers = workers or threads()
    if workers == 1:
        results = [_run_range((rule, axiom, seed, 0, budget))]
    else:
        jobs = [(rule, axiom, seed, a, b) for a, b in _chunks(budget, max(1, budget // (4 * workers)))]
        results = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for res in pool.map(_run_range, jobs):
                results.append(res)
    statuses = []
    for st, index, v in results:
        statuses.extend(st)
        if v is not None:
            return Verdict(
                VIOLATION, axiom.value, v.instance, v.note,
                v.evidence + (("index", index), ("instances", len(statuses))),
            )
    passed = statuses.count(PASS)
    inconclusive = statuses.count(INCONCLUSIVE)
    status = PASS if inconclusive == 0 else INCONCLUSIVE
    return Verdict(
        status, axiom.value, Instance(), f"{len(statuses)} instances: {passed} pass, {inconclusive} inconclusive",
        (("instances", len(statuses)), ("pass", passed), ("inconclusive", inconclusive)),
    )


# -- independence matrix ----------------------------------------------------


def independence_rules() -> list:
    """The seven example rules, each expected to fail exactly one axiom."""
    return [ks(), egalitarian(), dictator(1), weak_pareto_set(), leximin(), nash(), relative_max()]


EXPECTED_FAILURES = {
    "ks": AxiomId.INTERMEDIATE_PARETO,
    "egalitarian": AxiomId.SCALE_INVARIANCE,
    "dictator": AxiomId.ANONYMITY,
    "weak_pareto_set": AxiomId.CONTRACTION_EAI,
    "leximin": AxiomId.CONTINUITY,
    "nash": AxiomId.EQUAL_ADDITION_EAI,
    "relative_max": AxiomId.COMPROMISABILITY_EAI,
}


@dataclass(frozen=True)
class MatrixCell:
    rule: Rule
    axiom: str
    verdict: Verdict


def axiom_matrix(rules=None, axioms=None, budget: int = 10_000, seed: int = 0) -> list:
    rules = independence_rules() if rules is None else list(rules)
    axioms = RELATIVE_FAIR_AXIOMS if axioms is None else [AxiomId(a) for a in axioms]
    if not rules or not axioms:
        raise BadParameter("axiom_matrix needs at least one rule and one axiom")
    # one pause for the whole matrix: re-enabling collection between cells
    # triggers a full pass over everything the previous cell allocated
    with _paused_gc():
        return [MatrixCell(r, AxiomId(a).value, search_violation(r, a, budget, seed)) for r in rules for a in axioms]
