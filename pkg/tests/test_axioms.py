import pytest

from relfair import (
    AxiomId,
    Instance,
    Rat,
    SequenceSpec,
    check_axiom,
    check_hammond_instance,
    check_separability_instance,
    continuity_probe,
    dictator,
    egalitarian,
    ks,
    leximin,
    make_problem,
    minmax_blend,
    nash,
    relative_fair,
    relative_max,
    scmp_hull,
    simplex_weights,
    uniform_singleton,
    weak_pareto_set,
)
from relfair.errors import BadInstance

R = Rat
DELTA = relative_fair(simplex_weights(2))
UNIFORM = relative_fair(uniform_singleton(2))
A = AxiomId


def status(rule, axiom, **kw):
    return check_axiom(rule, axiom, Instance(**kw)).status


class TestPareto:
    def test_ks_intermediate_pareto_violation(self):
        v = check_axiom(ks(), A.INTERMEDIATE_PARETO, Instance(X=scmp_hull([(1, 2)])))
        assert v.violated

    def test_relative_fair_passes(self):
        X = make_problem([(1, 4), (2, 2), (4, 1)])
        for ax in (A.WEAK_PARETO, A.INTERMEDIATE_PARETO):
            assert status(DELTA, ax, X=X) == "pass"
        assert status(relative_fair(simplex_weights(2)), A.STRONG_PARETO, X=scmp_hull([(1, 2)])) == "violation"

    def test_weak_pareto_for_ks(self):
        assert status(ks(), A.WEAK_PARETO, X=scmp_hull([(1, 2)])) == "pass"


class TestInvariances:
    def test_egalitarian_scale_violation(self):
        v = check_axiom(egalitarian(), A.SCALE_INVARIANCE, Instance(X=make_problem([(1, 2), (2, 1)]), a=(2, 1)))
        assert v.violated

    def test_dictator_anonymity_violation(self):
        assert status(dictator(1), A.ANONYMITY, X=scmp_hull([(1, 2)]), perm=(1, 0)) == "violation"

    def test_strong_symmetry(self):
        X = scmp_hull([(1, 2)])
        assert status(UNIFORM, A.STRONG_SYMMETRY, X=X) == "violation"
        assert status(ks(), A.STRONG_SYMMETRY, X=X) == "pass"

    def test_relative_fair_passes_scale_and_anonymity(self):
        X = make_problem([(1, 4), (3, 2)])
        assert status(DELTA, A.SCALE_INVARIANCE, X=X, a=(R(1, 2), 3)) == "pass"
        assert status(DELTA, A.ANONYMITY, X=scmp_hull([(1, 3)]), perm=(1, 0)) == "pass"


class TestEaiAxioms:
    def test_nash_equal_addition_violation(self):
        X = make_problem([(1, 4), (2, 2), (4, 1)])
        assert status(nash(), A.EQUAL_ADDITION_EAI, X=X, x=(2, 2), alpha=1) == "violation"

    def test_relative_max_compromisability(self):
        # with X = scmp{(1,2)} the midpoint (3/2,3/2) lies outside X, so the
        # axiom's premise fails; adding the midpoint as a generator restores it
        with pytest.raises(BadInstance):
            check_axiom(relative_max(), A.COMPROMISABILITY_EAI,
                        Instance(X=scmp_hull([(1, 2)]), x=(1, 2), y=(2, 1), alpha=R(1, 2)))
        X = scmp_hull([(1, 2), (R(3, 2), R(3, 2))])
        assert status(relative_max(), A.COMPROMISABILITY_EAI, X=X, x=(1, 2), y=(2, 1), alpha=R(1, 2)) == "violation"
        assert status(DELTA, A.COMPROMISABILITY_EAI, X=X, x=(R(3, 2), R(3, 2)), y=(R(3, 2), R(3, 2)), alpha=R(1, 2)) == "pass"

    def test_weak_pareto_set_contraction_violation(self):
        X = scmp_hull([(1, 2)])
        X2 = make_problem([(1, 1)])
        assert status(weak_pareto_set(), A.CONTRACTION_EAI, X=X, X2=X2) == "violation"
        assert status(DELTA, A.CONTRACTION_EAI, X=X, X2=X2) == "pass"

    def test_contraction_requires_subset(self):
        with pytest.raises(BadInstance):
            check_axiom(DELTA, A.CONTRACTION_EAI, Instance(X=make_problem([(1, 1)]), X2=scmp_hull([(1, 2)])))


class TestHammond:
    X = scmp_hull([(1, 4), (2, R(29, 10))])

    def test_uniform_violates(self):
        assert check_hammond_instance(UNIFORM, self.X, (1, 4), (2, R(29, 10)), 0, 1).violated

    def test_maximin_passes(self):
        assert check_hammond_instance(DELTA, self.X, (1, 4), (2, R(29, 10)), 0, 1).passed

    def test_same_index_rejected(self):
        with pytest.raises(BadInstance):
            check_hammond_instance(DELTA, self.X, (1, 4), (2, R(29, 10)), 0, 0)


class TestSeparability:
    def test_maximin_violation_replays(self):
        h = R(1, 2)
        X = scmp_hull([(7 * h, 11 * h, 11 * h)])
        X2 = scmp_hull([(3 * h, 2, 11 * h)])
        v = check_separability_instance(
            relative_fair(simplex_weights(3)), (1,), (11 * h, 11 * h, 7 * h), (3 * h, 2, 2), X, X2
        )
        assert v.violated
        assert check_axiom(relative_fair(simplex_weights(3)), A.SEPARABILITY_EAI, v.instance).violated

    def test_uniform_passes_same_instance(self):
        h = R(1, 2)
        X = scmp_hull([(7 * h, 11 * h, 11 * h)])
        X2 = scmp_hull([(3 * h, 2, 11 * h)])
        v = check_separability_instance(
            relative_fair(uniform_singleton(3)), (1,), (11 * h, 11 * h, 7 * h), (3 * h, 2, 2), X, X2
        )
        assert v.passed

    def test_bad_subset(self):
        X = make_problem([(2, 2, 2)])
        with pytest.raises(BadInstance):
            check_separability_instance(relative_fair(uniform_singleton(3)), (0, 1, 2), (1, 1, 1), (1, 1, 1), X, X)

    def test_blend_passes_simple_instance(self):
        X = scmp_hull([(1, 3), (2, 2)])
        v = check_separability_instance(minmax_blend(R(1, 3), R(2, 3)), (0,), (2, 2), (1, 2), X, X)
        assert v.status == "pass"


def _lex_sequence(ks_=(10, 100, 1000)):
    problems = tuple(scmp_hull([(1, 1), (1 - R(1, k), 2)]) for k in ks_)
    return SequenceSpec(tuple(ks_), problems, tuple((R(1), R(1)) for _ in ks_), scmp_hull([(1, 2)]), (R(1), R(1)))


class TestContinuity:
    def test_leximin_violation(self):
        assert continuity_probe(leximin(), _lex_sequence()).violated

    def test_maximin_passes(self):
        assert continuity_probe(DELTA, _lex_sequence()).passed

    def test_constant_sequence_passes_for_every_rule(self):
        X = scmp_hull([(1, 2)])
        for rule in (DELTA, UNIFORM, leximin(), nash(), ks(), egalitarian()):
            from relfair import solve

            w = solve(rule, X).witnesses[0]
            seq = SequenceSpec((1, 2, 3), (X, X, X), (w, w, w), X, w)
            assert continuity_probe(rule, seq).status == "pass"

    def test_limit_point_outside_limit_problem(self):
        seq = SequenceSpec((1,), (scmp_hull([(1, 2)]),), ((R(1), R(1)),), make_problem([(1, 1)]), (R(2), R(2)))
        with pytest.raises(BadInstance):
            continuity_probe(DELTA, seq)
