from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relfair import (
    Rat,
    contains,
    hausdorff_upper,
    ideal_point,
    is_equal_able,
    is_strong_pareto,
    is_symmetric,
    is_weak_pareto,
    make_problem,
    permute,
    scale,
    scmp_hull,
    translate_cmp,
)
from relfair.errors import (
    DegenerateProblem,
    DimensionMismatch,
    EmptyInput,
    NonpositiveScale,
    NonpositiveShift,
    PointNotInProblem,
)

from strategies import points, pos_rats, problems, rats

R = Rat


def gens(X):
    return set(X.generators)


class TestConstruction:
    def test_incomparable_points_are_kept(self):
        assert gens(make_problem([(1, 2), (2, 1)])) == {(1, 2), (2, 1)}

    def test_dominated_point_is_removed(self):
        assert make_problem([(1, 1), (2, 2)]).generators == ((2, 2),)

    def test_rejects_degenerate_empty_and_ragged(self):
        with pytest.raises(DegenerateProblem):
            make_problem([(0, 0)])
        with pytest.raises(EmptyInput):
            make_problem([])
        with pytest.raises(DimensionMismatch):
            make_problem([(1, 2), (1, 2, 3)])

    def test_generators_sorted_lexicographically(self):
        X = make_problem([(4, 1), (1, 4), (2, 2)])
        assert list(X.generators) == sorted(X.generators)

    @pytest.mark.parametrize(
        "pts, expected",
        [([(1, 2)], {(1, 2), (2, 1)}), ([(1, 1)], {(1, 1)}), ([(1, 2), (1, 1)], {(1, 2), (2, 1)})],
    )
    def test_symmetric_hull(self, pts, expected):
        assert gens(scmp_hull(pts)) == expected


class TestQueries:
    @pytest.mark.parametrize(
        "X, b",
        [
            (scmp_hull([(1, 2)]), (2, 2)),
            (make_problem([(1, 4), (2, 2), (4, 1)]), (4, 4)),
            (make_problem([(3, 1)]), (3, 1)),
        ],
    )
    def test_ideal_point(self, X, b):
        assert ideal_point(X) == b

    def test_contains(self):
        X = scmp_hull([(1, 2)])
        assert contains(X, (1, 1))
        assert not contains(X, (R(3, 2), R(3, 2)))
        assert not contains(X, (2, 2))
        with pytest.raises(DimensionMismatch):
            contains(X, (1, 1, 1))

    def test_pareto_tests(self):
        X = scmp_hull([(1, 2)])
        assert is_weak_pareto(X, (1, 1)) and not is_strong_pareto(X, (1, 1))
        assert is_weak_pareto(X, (1, 2)) and is_strong_pareto(X, (1, 2))
        assert not is_weak_pareto(X, (R(1, 2), R(1, 2)))
        with pytest.raises(PointNotInProblem):
            is_weak_pareto(X, (3, 3))

    def test_symmetry_and_equal_ability(self):
        assert is_symmetric(scmp_hull([(1, 2)])) and is_equal_able(scmp_hull([(1, 2)]))
        X = make_problem([(1, 4), (2, 2), (4, 1)])
        assert is_symmetric(X) and is_equal_able(X)
        Y = make_problem([(2, 1)])
        assert not is_symmetric(Y) and not is_equal_able(Y)


class TestTransforms:
    def test_scale(self):
        assert gens(scale(scmp_hull([(1, 2)]), (2, 1))) == {(2, 2), (4, 1)}
        X = make_problem([(1, 4), (2, 2)])
        assert scale(X, (1, 1)) == X
        assert scale(make_problem([(3, 1)]), (R(1, 3), 1)) == make_problem([(1, 1)])
        with pytest.raises(NonpositiveScale):
            scale(X, (0, 1))

    def test_translate(self):
        X = make_problem([(1, 4), (2, 2), (4, 1)])
        assert gens(translate_cmp(X, 1)) == {(2, 5), (3, 3), (5, 2)}
        assert translate_cmp(make_problem([(1, 1)]), 2) == make_problem([(3, 3)])
        assert gens(translate_cmp(scmp_hull([(1, 2)]), R(1, 2))) == {(R(3, 2), R(5, 2)), (R(5, 2), R(3, 2))}
        with pytest.raises(NonpositiveShift):
            translate_cmp(X, 0)

    def test_permute(self):
        assert permute(make_problem([(1, 2)]), (1, 0)) == make_problem([(2, 1)])
        assert gens(permute(make_problem([(1, 4), (2, 2)]), (1, 0))) == {(4, 1), (2, 2)}
        X = scmp_hull([(1, 2, 3)])
        assert all(permute(X, p) == X for p in permutations(range(3)))


class TestHausdorff:
    def test_identical_problems(self):
        X = scmp_hull([(1, 2)])
        assert hausdorff_upper(X, X) == 0

    def test_nested_boxes_sup_norm(self):
        assert hausdorff_upper(make_problem([(1, 1)]), make_problem([(2, 2)]), R(1, 4)) == 1

    def test_small_perturbation(self):
        k = 100
        X = scmp_hull([(1, 1), (1 - R(1, k), 2)])
        assert hausdorff_upper(X, scmp_hull([(1, 2)]), R(1, 8)) <= R(1, 100)


@given(problems(), st.data())
def test_scaling_scales_ideal_point(X, data):
    a = data.draw(points(X.n))
    assert ideal_point(scale(X, a)) == tuple(ai * bi for ai, bi in zip(a, ideal_point(X)))


@given(problems(), st.data())
def test_comprehensive(X, data):
    g = data.draw(st.sampled_from(X.generators))
    fracs = data.draw(st.tuples(*[st.sampled_from([R(0), R(1, 3), R(1, 2), R(1)])] * X.n))
    x = tuple(f * c for f, c in zip(fracs, g))
    assert contains(X, x)
    y = tuple(c / 2 for c in x)
    assert contains(X, y)


@given(st.lists(points(3), min_size=1, max_size=3))
def test_symmetric_hull_is_permutation_closed(pts):
    X = scmp_hull(pts)
    assert is_symmetric(X)
    assert all(permute(X, p) == X for p in permutations(range(3)))


@given(problems())
def test_make_problem_idempotent(X):
    assert make_problem(X.generators) == X


@given(problems(), st.data())
def test_strong_pareto_implies_weak(X, data):
    g = data.draw(st.sampled_from(X.generators))
    fracs = data.draw(st.tuples(*[st.sampled_from([R(1, 2), R(1)])] * X.n))
    x = tuple(f * c for f, c in zip(fracs, g))
    if is_strong_pareto(X, x):
        assert is_weak_pareto(X, x)


@given(problems(), pos_rats, pos_rats)
def test_translations_compose(X, a, b):
    assert translate_cmp(translate_cmp(X, a), b) == translate_cmp(X, a + b)


@given(problems(n=2), problems(n=2))
def test_hausdorff_is_symmetric_and_bounds_generator_gaps(X, Y):
    d = hausdorff_upper(X, Y)
    assert d == hausdorff_upper(Y, X)
    assert d >= 0
    assert (d == 0) == (X == Y)
