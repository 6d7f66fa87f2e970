import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relfair import (
    Rat,
    blend_weights,
    canonicalize,
    gini_weights,
    make_weight_set,
    min_dot,
    simplex_weights,
    uniform_singleton,
    weight_set_from_norm,
)
from relfair.errors import BadNorm, BadParameter, DimensionMismatch, EmptyInput, MonotonicityViolation, NotInSimplex
from relfair.weights import symmetrize

R = Rat
H = R(1, 2)


def verts(W):
    return set(W.vertices)


def test_make_weight_set():
    assert make_weight_set([(H, H)]).vertices == ((H, H),)
    assert verts(make_weight_set([(1, 0), (0, 1)])) == {(1, 0), (0, 1)}
    assert len(make_weight_set([(1, 0), (1, 0)]).vertices) == 1
    with pytest.raises(NotInSimplex):
        make_weight_set([(H, R(1, 4))])
    with pytest.raises(EmptyInput):
        make_weight_set([])


def test_symmetrize():
    assert verts(symmetrize(make_weight_set([(R(2, 3), R(1, 3))]))) == {(R(2, 3), R(1, 3)), (R(1, 3), R(2, 3))}
    assert symmetrize(make_weight_set([(H, H)])).vertices == ((H, H),)
    W = symmetrize(make_weight_set([(H, R(1, 3), R(1, 6))]))
    assert len(W.vertices) == 6 and W.symmetric


def test_named_constructors():
    assert verts(simplex_weights(2)) == {(1, 0), (0, 1)}
    for n in (2, 3, 4):
        assert blend_weights(1, n) == uniform_singleton(n)
        assert blend_weights(0, n) == simplex_weights(n)
    with pytest.raises(BadParameter):
        simplex_weights(1)
    with pytest.raises(BadParameter):
        blend_weights(R(3, 2), 2)
    with pytest.raises(BadParameter):
        gini_weights((H, R(1, 4)))


def test_min_dot():
    v = (H, 1)
    assert min_dot(simplex_weights(2), v) == H
    assert min_dot(uniform_singleton(2), v) == R(3, 4)
    assert min_dot(gini_weights((R(2, 3), R(1, 3))), v) == R(2, 3)
    with pytest.raises(DimensionMismatch):
        min_dot(simplex_weights(2), (1, 1, 1))


def test_canonicalize():
    assert verts(canonicalize(make_weight_set([(1, 0), (0, 1), (H, H)]))) == {(1, 0), (0, 1)}
    assert canonicalize(uniform_singleton(2)).vertices == ((H, H),)
    blend = blend_weights(H, 2)
    padded = make_weight_set(list(blend.vertices) + [(H, H)])
    assert verts(canonicalize(padded)) == verts(blend)


def test_weight_set_from_norm():
    assert weight_set_from_norm("l2", 0, 3).vertices == uniform_singleton(3).vertices
    W = weight_set_from_norm("sup", R(1, 2), 2)
    assert all(min(v) >= 0 and sum(v) == 1 for v in W.vertices)
    assert W.symmetric
    with pytest.raises(MonotonicityViolation):
        weight_set_from_norm("sup", 5, 2)
    with pytest.raises(BadNorm):
        weight_set_from_norm("l7", R(1, 2), 2)
    approx = weight_set_from_norm("l2", R(1, 3), 3, sample_count=16)
    assert all(min(v) >= 0 and sum(v) == 1 for v in approx.vertices)
    assert approx.approximate and approx.symmetric


def _simplex_point(rng, n):
    cuts = sorted(rng.randint(0, 12) for _ in range(n - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [12])]
    return tuple(R(p, 12) for p in parts)


seeds = st.integers(0, 10**6)


@given(seeds)
def test_symmetrized_min_dot_is_min_over_permutations(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    W = make_weight_set([_simplex_point(rng, n) for _ in range(2)])
    v = tuple(R(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(n))
    expected = min(min_dot(W, tuple(v[i] for i in p)) for p in permutations(range(n)))
    assert min_dot(symmetrize(W), v) == expected


@given(seeds)
def test_min_dot_concave_and_normalized(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3, 4])
    W = make_weight_set([_simplex_point(rng, n) for _ in range(3)])
    v = tuple(R(rng.randint(0, 9)) for _ in range(n))
    u = tuple(R(rng.randint(0, 9)) for _ in range(n))
    mid = tuple((a + b) / 2 for a, b in zip(v, u))
    assert min_dot(W, mid) >= (min_dot(W, v) + min_dot(W, u)) / 2
    assert min_dot(W, (1,) * n) == 1


@pytest.mark.parametrize("seed", range(5))
def test_canonicalize_preserves_min_dot(seed):
    rng = random.Random(seed)
    n = 3
    base = [_simplex_point(rng, n) for _ in range(3)]
    mixes = [tuple((a + b) / 2 for a, b in zip(base[0], base[k])) for k in (1, 2)]
    W = make_weight_set(base + mixes)
    C = canonicalize(W)
    assert len(C.vertices) <= len(base)
    for _ in range(200):
        v = tuple(R(rng.randint(-5, 9), rng.randint(1, 3)) for _ in range(n))
        assert min_dot(C, v) == min_dot(W, v)
