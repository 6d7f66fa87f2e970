"""Checking axioms of choice rules on concrete instances.

When a rule's choice set is available as an exact union of polytopes the
verdict is decided exactly (vertex enumeration and union containment).
Otherwise only points known to be chosen are tested: a failure on them
is a genuine Violation, but success yields Inconclusive rather than Pass.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from . import reals
from ._rat import ONE, ZERO, Rat, as_rat
from .errors import BadInstance
from .geometry import (
    Problem,
    apply_perm,
    as_point,
    contains,
    hausdorff_upper,
    ideal_point,
    is_equal_able,
    is_symmetric,
    is_weak_pareto,
    leq,
    scale,
    strictly_below,
    translate_cmp,
    weak_pareto_boxes,
)
from .lp import GE, LinConstraint, box
from .polyhedra import (
    centroid,
    intersect,
    permute_poly,
    scale_poly,
    translate_poly,
    union_equal,
    union_subset,
    vertices,
)
from .rules import Rule, _value, compare_values, optimum, solve


class AxiomId(str, Enum):
    STRONG_PARETO = "strong_pareto"
    WEAK_PARETO = "weak_pareto"
    INTERMEDIATE_PARETO = "intermediate_pareto"
    SCALE_INVARIANCE = "scale_invariance"
    ANONYMITY = "anonymity"
    CONTRACTION_EAI = "contraction_eai"
    CONTINUITY = "continuity"
    EQUAL_ADDITION_EAI = "equal_addition_eai"
    COMPROMISABILITY_EAI = "compromisability_eai"
    HAMMOND_EAI = "hammond_eai"
    SEPARABILITY_EAI = "separability_eai"
    STRONG_SYMMETRY = "strong_symmetry"


# the seven axioms that together single out relative fair rules
RELATIVE_FAIR_AXIOMS = (
    AxiomId.INTERMEDIATE_PARETO,
    AxiomId.SCALE_INVARIANCE,
    AxiomId.ANONYMITY,
    AxiomId.CONTRACTION_EAI,
    AxiomId.CONTINUITY,
    AxiomId.EQUAL_ADDITION_EAI,
    AxiomId.COMPROMISABILITY_EAI,
)

PASS, VIOLATION, INCONCLUSIVE = "pass", "violation", "inconclusive"


@dataclass(frozen=True)
class SequenceSpec:
    """A finite sequence x^k ∈ F(X^k) meant to converge to x with X^k → X."""

    ks: tuple
    problems: tuple
    points: tuple
    limit: Problem
    point: tuple


@dataclass(frozen=True)
class Instance:
    """The objects an axiom quantifies over; unused fields stay ``None``.

    ``X2`` is the second problem (the contraction X′ or separability X′),
    ``a`` a scale vector, ``perm`` a 0-based permutation, ``M`` a tuple of
    0-based indices, ``i``/``j`` 0-based individuals.
    """

    X: Optional[Problem] = None
    X2: Optional[Problem] = None
    x: Optional[tuple] = None
    y: Optional[tuple] = None
    a: Optional[tuple] = None
    alpha: Optional[Rat] = None
    perm: Optional[tuple] = None
    M: Optional[tuple] = None
    i: Optional[int] = None
    j: Optional[int] = None
    sequence: Optional[SequenceSpec] = None

    def __post_init__(self):
        for name in ("x", "y", "a"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_point(v))
        if self.alpha is not None:
            object.__setattr__(self, "alpha", as_rat(self.alpha))
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(int(k) for k in self.perm))
        if self.M is not None:
            object.__setattr__(self, "M", tuple(sorted({int(k) for k in self.M})))


@dataclass(frozen=True)
class Verdict:
    status: str
    axiom: str
    instance: Instance
    note: str = ""
    evidence: tuple = ()  # (label, value) pairs

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def violated(self) -> bool:
        return self.status == VIOLATION


# -- choice-set views -------------------------------------------------------

IN, OUT, TIE = "in", "out", "tie"


@dataclass(frozen=True)
class _View:
    pieces: Optional[tuple]
    candidates: tuple  # points certainly in F(X)


@lru_cache(maxsize=32768)
def _view(rule: Rule, X: Problem) -> _View:
    cs = solve(rule, X)
    pieces = cs.exact_pieces()
    cands = dict.fromkeys(cs.witnesses)
    if pieces is not None:
        pieces = tuple(P for P in pieces if vertices(P))
        for P in pieces:
            cands.update(dict.fromkeys(vertices(P)))
    return _View(pieces, tuple(cands))


def _has_real(v) -> bool:
    if isinstance(v, tuple):
        return any(reals.is_real(c) for c in v)
    return reals.is_real(v)


def membership(rule: Rule, X: Problem, x) -> str:
    """IN, OUT, or TIE (equal to the optimum only within the real tolerance)."""
    return _membership(rule, X, tuple(x))


@lru_cache(maxsize=131072)
def _membership(rule: Rule, X: Problem, x: tuple) -> str:
    if len(x) != X.n or not contains(X, x):
        return OUT
    if rule.kind == "weak_pareto_set":
        return IN if is_weak_pareto(X, x) else OUT
    if rule.kind == "ks":
        return IN if x == solve(rule, X).witnesses[0] else OUT
    f, best, _ = optimum(rule, X)
    v = _value(rule, f, x)
    if compare_values(v, best) != 0:
        return OUT
    if _has_real(v) or _has_real(best):
        exact_eq = v == best if not isinstance(v, tuple) else all(
            reals.real(p) == reals.real(q) for p, q in zip(v, best)
        )
        if not exact_eq:
            return TIE
    return IN


def _vkey(pieces):
    return frozenset(vertices(P) for P in pieces)


def _mapped_key(pieces, f):
    """Vertex key of the images of pieces under a coordinatewise bijection f."""
    return frozenset(tuple(sorted(map(f, vertices(P)))) for P in pieces)


def _same_union(A, B):
    A = [P for P in A if vertices(P)]
    B = [P for P in B if vertices(P)]
    if _vkey(A) == _vkey(B):
        return True, None
    return union_equal(A, B)


def _require(cond: bool, msg: str):
    if not cond:
        raise BadInstance(msg)


def _dominator(X: Problem, x, strict: bool):
    for g in X.generators:
        if (strictly_below(x, g) if strict else (leq(x, g) and g != x)):
            return g
    return None


def _v(status, axiom, inst, note="", **evidence):
    return Verdict(status, axiom.value, inst, note, tuple(evidence.items()))


# -- individual axioms ------------------------------------------------------


def _weak_pareto_part(rule, axiom, inst):
    X = inst.X
    view = _view(rule, X)
    for c in view.candidates:
        g = _dominator(X, c, strict=True)
        if g is not None:
            return _v(VIOLATION, axiom, inst, "a chosen point is strictly dominated", chosen=c, dominated_by=g)
    if view.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "known chosen points are weakly Pareto; whole set not certified")
    wp = [box(lo, hi) for lo, hi in weak_pareto_boxes(X)]
    ok, x = union_subset(view.pieces, wp)
    if not ok:
        return _v(
            VIOLATION, axiom, inst, "a chosen point is strictly dominated",
            chosen=x, dominated_by=_dominator(X, x, strict=True),
        )
    return None


def _check_weak_pareto(rule, inst):
    axiom = AxiomId.WEAK_PARETO
    _require(inst.X is not None, "weak Pareto needs a problem X")
    return _weak_pareto_part(rule, axiom, inst) or _v(PASS, axiom, inst)


def _check_strong_pareto(rule, inst):
    axiom = AxiomId.STRONG_PARETO
    X = inst.X
    _require(X is not None, "strong Pareto needs a problem X")
    view = _view(rule, X)
    gens = set(X.generators)
    # on a union of boxes the strongly Pareto points are exactly the generators
    for c in view.candidates:
        if c not in gens:
            return _v(VIOLATION, axiom, inst, "a chosen point is dominated", chosen=c, dominated_by=_dominator(X, c, False))
    if view.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "known chosen points are generators; whole set not certified")
    for P in view.pieces:
        V = vertices(P)
        if len(V) > 1:
            t = Rat(1, 2)
            while True:
                x = tuple(p + t * (q - p) for p, q in zip(V[0], V[1]))
                if x not in gens:
                    break
                t /= 2
            return _v(VIOLATION, axiom, inst, "a chosen point is dominated", chosen=x, dominated_by=_dominator(X, x, False))
    return _v(PASS, axiom, inst)


def _check_intermediate_pareto(rule, inst):
    axiom = AxiomId.INTERMEDIATE_PARETO
    X = inst.X
    _require(X is not None, "intermediate Pareto needs a problem X")
    weak = _weak_pareto_part(rule, axiom, inst)
    if weak is not None and weak.violated:
        return weak
    marks = [membership(rule, X, g) for g in X.generators]
    if IN not in marks:
        if TIE in marks:
            return _v(INCONCLUSIVE, axiom, inst, "a generator ties with the optimum only within tolerance")
        chosen = _view(rule, X).candidates[0]
        return _v(
            VIOLATION, axiom, inst, "no chosen point is strongly Pareto",
            chosen=chosen, dominated_by=_dominator(X, chosen, False),
        )
    return weak or _v(PASS, axiom, inst)


def _check_scale_invariance(rule, inst):
    axiom = AxiomId.SCALE_INVARIANCE
    X, a = inst.X, inst.a
    _require(X is not None and a is not None and len(a) == X.n, "scale invariance needs X and a")
    _require(all(c > 0 for c in a), "scale vector must be strictly positive")
    aX = scale(X, a)
    v1, v2 = _view(rule, X), _view(rule, aX)
    for c in v1.candidates:
        ac = tuple(p * q for p, q in zip(a, c))
        if membership(rule, aX, ac) == OUT:
            return _v(VIOLATION, axiom, inst, "a scaled chosen point is not chosen in aX", point=ac, scaled_problem=aX)
    for c in v2.candidates:
        back = tuple(q / p for p, q in zip(a, c))
        if membership(rule, X, back) == OUT:
            return _v(VIOLATION, axiom, inst, "a point chosen in aX is not a scaled chosen point", point=c, scaled_problem=aX)
    if v1.pieces is None or v2.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "agreement on known chosen points only")
    if _mapped_key(v1.pieces, lambda c: tuple(p * q for p, q in zip(a, c))) == _vkey(v2.pieces):
        return _v(PASS, axiom, inst)
    ok, wit = _same_union([scale_poly(P, a) for P in v1.pieces], v2.pieces)
    if not ok:
        x, side = wit
        note = "in aF(X) but not F(aX)" if side == "left" else "in F(aX) but not aF(X)"
        return _v(VIOLATION, axiom, inst, note, point=x, scaled_problem=aX)
    return _v(PASS, axiom, inst)


def _check_anonymity(rule, inst):
    axiom = AxiomId.ANONYMITY
    X, perm = inst.X, inst.perm
    _require(X is not None and perm is not None, "anonymity needs X and a permutation")
    _require(sorted(perm) == list(range(X.n)), "perm must be a permutation of 0..n-1")
    _require(is_symmetric(X), "anonymity applies to symmetric problems only")
    view = _view(rule, X)
    for c in view.candidates:
        cp = apply_perm(c, perm)
        if membership(rule, X, cp) == OUT:
            return _v(VIOLATION, axiom, inst, "a permuted chosen point is not chosen", chosen=c, permuted=cp)
    if view.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "permutations of known chosen points are chosen")
    if _mapped_key(view.pieces, lambda c: apply_perm(c, perm)) <= _vkey(view.pieces):
        return _v(PASS, axiom, inst)
    ok, x = union_subset([permute_poly(P, perm) for P in view.pieces], view.pieces)
    if not ok:
        inv = [0] * X.n
        for k, p in enumerate(perm):
            inv[p] = k
        return _v(VIOLATION, axiom, inst, "a permuted chosen point is not chosen", chosen=apply_perm(x, inv), permuted=x)
    return _v(PASS, axiom, inst)


def _check_strong_symmetry(rule, inst):
    axiom = AxiomId.STRONG_SYMMETRY
    X = inst.X
    _require(X is not None and is_symmetric(X), "strong symmetry applies to symmetric problems only")
    view = _view(rule, X)
    for c in view.candidates:
        if len(set(c)) > 1:
            return _v(VIOLATION, axiom, inst, "a chosen point has unequal coordinates", chosen=c)
    if view.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "known chosen points are equal")
    return _v(PASS, axiom, inst)


def _check_contraction(rule, inst):
    axiom = AxiomId.CONTRACTION_EAI
    X, Xs = inst.X, inst.X2
    _require(X is not None and Xs is not None, "contraction needs X and X2")
    _require(is_equal_able(X) and is_equal_able(Xs), "contraction needs equal abilities in both problems")
    _require(all(contains(X, g) for g in Xs.generators), "X2 must be a subset of X")
    v1, v2 = _view(rule, X), _view(rule, Xs)
    inside = [c for c in v1.candidates if contains(Xs, c)]
    for c in inside:
        if membership(rule, Xs, c) == OUT:
            return _v(VIOLATION, axiom, inst, "chosen in X, feasible in X2, but not chosen in X2", point=c)
    if inside:
        for c in v2.candidates:
            if membership(rule, X, c) == OUT:
                return _v(VIOLATION, axiom, inst, "chosen in X2 but not chosen in X", point=c)
    if v1.pieces is None or v2.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "agreement on known chosen points only")
    meet = []
    for P in v1.pieces:
        corners = vertices(P)
        if any(all(leq(v, g) for v in corners) for g in Xs.generators):
            meet.append(P)
            continue
        for g in Xs.generators:
            Q = intersect(P, box(tuple(ZERO for _ in g), g))
            if vertices(Q):
                meet.append(Q)
    if not meet:
        return _v(PASS, axiom, inst, "vacuous: X2 misses F(X)")
    ok, wit = _same_union(v2.pieces, meet)
    if not ok:
        x, side = wit
        note = "chosen in X2 but not chosen in X" if side == "left" else "chosen in X, feasible in X2, but not chosen in X2"
        return _v(VIOLATION, axiom, inst, note, point=x)
    return _v(PASS, axiom, inst)


def _check_equal_addition(rule, inst):
    axiom = AxiomId.EQUAL_ADDITION_EAI
    X, alpha = inst.X, inst.alpha
    _require(X is not None and alpha is not None and alpha > 0, "equal addition needs X and alpha > 0")
    _require(is_equal_able(X), "equal addition applies to equal-able problems only")
    Xa = translate_cmp(X, alpha)

    def shift(p, s):
        return tuple(c + s for c in p)

    if inst.x is not None:
        _require(contains(X, inst.x), "x must lie in X")
        m1, m2 = membership(rule, X, inst.x), membership(rule, Xa, shift(inst.x, alpha))
        if TIE in (m1, m2):
            return _v(INCONCLUSIVE, axiom, inst, "membership decided only within tolerance")
        if m1 != m2:
            note = "chosen before the shift only" if m1 == IN else "chosen after the shift only"
            return _v(VIOLATION, axiom, inst, note, point=inst.x, shifted_problem=Xa)
        return _v(PASS, axiom, inst)

    v1, v2 = _view(rule, X), _view(rule, Xa)
    for c in v1.candidates:
        if membership(rule, Xa, shift(c, alpha)) == OUT:
            return _v(VIOLATION, axiom, inst, "chosen before the shift only", point=c, shifted_problem=Xa)
    for c in v2.candidates:
        if all(p >= alpha for p in c) and membership(rule, X, shift(c, -alpha)) == OUT:
            return _v(VIOLATION, axiom, inst, "chosen after the shift only", point=shift(c, -alpha), shifted_problem=Xa)
    if v1.pieces is None or v2.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "agreement on known chosen points only")
    n = X.n
    floor = [LinConstraint(tuple(ONE if k == i else ZERO for k in range(n)), alpha, GE) for i in range(n)]
    ok, wit = _same_union([translate_poly(P, alpha) for P in v1.pieces], [Q.with_constraints(floor) for Q in v2.pieces])
    if not ok:
        x, side = wit
        note = "chosen before the shift only" if side == "left" else "chosen after the shift only"
        return _v(VIOLATION, axiom, inst, note, point=shift(x, -alpha), shifted_problem=Xa)
    return _v(PASS, axiom, inst)


def _check_compromisability(rule, inst):
    axiom = AxiomId.COMPROMISABILITY_EAI
    X, x, y, alpha = inst.X, inst.x, inst.y, inst.alpha
    _require(None not in (X, x, y, alpha), "compromisability needs X, x, y and alpha")
    _require(ZERO <= alpha <= ONE, "alpha must lie in [0, 1]")
    _require(is_equal_able(X), "compromisability applies to equal-able problems only")
    _require(membership(rule, X, x) != OUT and membership(rule, X, y) != OUT, "x and y must be chosen in X")
    mix = tuple(alpha * p + (1 - alpha) * q for p, q in zip(x, y))
    _require(contains(X, mix), f"the combination {mix} is not in X")
    view = _view(rule, X)
    for c in view.candidates:
        if leq(mix, c):
            return _v(PASS, axiom, inst, combination=mix, dominating_choice=c)
    if view.pieces is None:
        return _v(INCONCLUSIVE, axiom, inst, "no known chosen point dominates the combination", combination=mix)
    n = X.n
    up = [LinConstraint(tuple(ONE if k == i else ZERO for k in range(n)), mix[i], GE) for i in range(n)]
    for P in view.pieces:
        V = vertices(P.with_constraints(up))
        if V:
            return _v(PASS, axiom, inst, combination=mix, dominating_choice=V[0])
    return _v(VIOLATION, axiom, inst, "no chosen point weakly dominates the combination", combination=mix)


def _check_hammond(rule, inst):
    return check_hammond_instance(rule, inst.X, inst.x, inst.y, inst.i, inst.j)


def check_hammond_instance(rule: Rule, X: Problem, x, y, i: int, j: int) -> Verdict:
    """x_i < y_i < y_j < x_j, equal elsewhere: x chosen and y feasible force y chosen."""
    axiom = AxiomId.HAMMOND_EAI
    inst = Instance(X=X, x=None if x is None else tuple(x), y=None if y is None else tuple(y), i=i, j=j)
    _require(None not in (X, x, y, i, j), "Hammond equity needs X, x, y, i, j")
    _require(i != j, "i and j must differ")
    x, y = inst.x, inst.y
    _require(0 <= i < X.n and 0 <= j < X.n and len(x) == len(y) == X.n, "index or dimension out of range")
    _require(x[i] < y[i] < y[j] < x[j], "need x_i < y_i < y_j < x_j")
    _require(all(x[k] == y[k] for k in range(X.n) if k not in (i, j)), "x and y must agree outside i, j")
    _require(is_equal_able(X), "Hammond equity applies to equal-able problems only")
    _require(contains(X, x) and contains(X, y), "x and y must lie in X")
    mx, my = membership(rule, X, x), membership(rule, X, y)
    if mx == IN and my == OUT:
        return _v(VIOLATION, axiom, inst, "x is chosen but the more equal y is not")
    if mx == OUT or my == IN:
        return _v(PASS, axiom, inst)
    return _v(INCONCLUSIVE, axiom, inst, "membership decided only within tolerance")


def _check_separability(rule, inst):
    return check_separability_instance(rule, inst.M, inst.x, inst.y, inst.X, inst.X2)


def _compose(first, second, M):
    return tuple(first[k] if k in M else second[k] for k in range(len(first)))


def check_separability_instance(rule: Rule, M, x, y, X: Problem, X2: Problem) -> Verdict:
    """(x_M, x_R) ∈ F(X) and (y_M, x_R) ∉ F(X) forbid (y_M, y_R) ∈ F(X2) when (x_M, y_R) ∈ X2."""
    axiom = AxiomId.SEPARABILITY_EAI
    _require(None not in (M, x, y, X, X2), "separability needs M, x, y, X and X2")
    M = tuple(sorted(set(M)))
    inst = Instance(X=X, X2=X2, x=tuple(x), y=tuple(y), M=M)
    x, y, n = inst.x, inst.y, X.n
    _require(len(x) == len(y) == n == X2.n, "dimension mismatch")
    _require(0 < len(M) < n and all(0 <= k < n for k in M), "M must be a nonempty proper subset")
    _require(any(x) and any(y) and min(x) >= 0 and min(y) >= 0, "x and y must be nonnegative and nonzero")
    _require(is_equal_able(X) and is_equal_able(X2), "separability applies to equal-able problems only")
    u = _compose(y, x, M)  # (y_M, x_R)
    v = _compose(x, y, M)  # (x_M, y_R)
    _require(contains(X, x) and contains(X, u), "(x_M, x_R) and (y_M, x_R) must lie in X")
    _require(contains(X2, v) and contains(X2, y), "(x_M, y_R) and (y_M, y_R) must lie in X2")
    mx, mu = membership(rule, X, x), membership(rule, X, u)
    if mx == OUT or mu == IN:
        return _v(PASS, axiom, inst, "vacuous: premise fails")
    if TIE in (mx, mu):
        return _v(INCONCLUSIVE, axiom, inst, "membership decided only within tolerance")
    my = membership(rule, X2, y)
    if my == IN:
        return _v(VIOLATION, axiom, inst, "(y_M, y_R) is chosen in X2", first=u, second=v)
    if my == TIE:
        return _v(INCONCLUSIVE, axiom, inst, "membership decided only within tolerance")
    return _v(PASS, axiom, inst)


# -- continuity -------------------------------------------------------------


def _sup_dist(p, q):
    return max(abs(a - b) for a, b in zip(p, q))


def _shrinking(values) -> bool:
    """Nonincreasing and ending at most 1/100 of the start (or at zero)."""
    if any(b > a for a, b in zip(values, values[1:])):
        return False
    return values[-1] == 0 or values[-1] * 100 <= values[0]


def continuity_probe(rule: Rule, seq: SequenceSpec) -> Verdict:
    """Probe closedness of F along one finite sequence.

    Violation only if every x^k is verified chosen in X^k, the exact
    sup-norm Hausdorff distances to X and the point distances to x shrink,
    and x is verifiably not chosen in X.
    """
    axiom = AxiomId.CONTINUITY
    inst = Instance(sequence=seq)
    _require(seq is not None and len(seq.problems) == len(seq.points) == len(seq.ks) > 0, "malformed sequence")
    n = seq.limit.n
    _require(all(P.n == n for P in seq.problems) and len(seq.point) == n, "dimension mismatch in sequence")
    _require(contains(seq.limit, seq.point), "the limit point must lie in the limit problem")
    final = membership(rule, seq.limit, seq.point)
    if final == IN:
        return _v(PASS, axiom, inst)
    if final == TIE:
        return _v(INCONCLUSIVE, axiom, inst, "limit membership decided only within tolerance")
    marks = [membership(rule, P, p) for P, p in zip(seq.problems, seq.points)]
    if any(m != IN for m in marks):
        return _v(INCONCLUSIVE, axiom, inst, "not every sequence point is verifiably chosen")
    hd = [hausdorff_upper(P, seq.limit) for P in seq.problems]
    pd = [_sup_dist(p, seq.point) for p in seq.points]
    if not (_shrinking(hd) and _shrinking(pd)):
        return _v(INCONCLUSIVE, axiom, inst, "distances do not certify convergence", hausdorff=tuple(hd), point_distance=tuple(pd))
    return _v(
        VIOLATION, axiom, inst, "limit of chosen points is not chosen in the limit problem",
        hausdorff_last=hd[-1], point_distance_last=pd[-1],
    )


def _check_continuity(rule, inst):
    return continuity_probe(rule, inst.sequence)


_CHECKERS = {
    AxiomId.STRONG_PARETO: _check_strong_pareto,
    AxiomId.WEAK_PARETO: _check_weak_pareto,
    AxiomId.INTERMEDIATE_PARETO: _check_intermediate_pareto,
    AxiomId.SCALE_INVARIANCE: _check_scale_invariance,
    AxiomId.ANONYMITY: _check_anonymity,
    AxiomId.CONTRACTION_EAI: _check_contraction,
    AxiomId.CONTINUITY: _check_continuity,
    AxiomId.EQUAL_ADDITION_EAI: _check_equal_addition,
    AxiomId.COMPROMISABILITY_EAI: _check_compromisability,
    AxiomId.HAMMOND_EAI: _check_hammond,
    AxiomId.SEPARABILITY_EAI: _check_separability,
    AxiomId.STRONG_SYMMETRY: _check_strong_symmetry,
}


@lru_cache(maxsize=65536)
def check_axiom(rule: Rule, axiom, instance: Instance) -> Verdict:
    """Decide one axiom on one instance; raises BadInstance when preconditions fail."""
    return _CHECKERS[AxiomId(axiom)](rule, instance)
