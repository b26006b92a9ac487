import random

import pytest

from projtoric.code import generator_matrix
from projtoric.gf import GF
from projtoric.oracle import (
    BudgetExceededError,
    _exhaustive_np,
    _exhaustive_py,
    _row_basis,
    _row_basis_np,
    _row_basis_py,
    min_distance_exhaustive,
    min_weight_random_upper,
    pick_check,
    rank_gf,
    reduction_class_count_unionfind,
)
from projtoric.polytope import Polytope


def identity_entries(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def test_rank_examples(toy_triangle):
    field = GF(5)
    assert rank_gf(identity_entries(4), field) == 4
    assert rank_gf([[0, 0], [0, 0]], field) == 0
    assert rank_gf([], field) == 0
    assert rank_gf([[1, 2], [2, 4]], field) == 1
    M = generator_matrix(toy_triangle, GF(4))
    assert rank_gf(M.entries, GF(4)) == 5


def test_row_basis_backends_agree():
    rng = random.Random(11)
    for q in (2, 3, 4, 5, 8):
        field = GF(q)
        for _ in range(20):
            rows = rng.randrange(1, 5)
            cols = rng.randrange(1, 6)
            entries = [
                [rng.randrange(q) for _ in range(cols)] for _ in range(rows)
            ]
            a = _row_basis_py(entries, field)
            b = _row_basis_np(entries, field)
            assert a == b
            assert _row_basis(entries, field) == a


def test_exhaustive_examples(segment01, toy_triangle):
    seg = generator_matrix(segment01, GF(3))
    assert min_distance_exhaustive(seg.entries, GF(3)) == 3
    toy = generator_matrix(toy_triangle, GF(4))
    assert min_distance_exhaustive(toy.entries, GF(4)) == 8
    # repetition code: one row of n ones
    for q in (2, 3, 4):
        assert min_distance_exhaustive([[1] * 6], GF(q)) == 6


def test_exhaustive_budget():
    field = GF(4)
    entries = identity_entries(10)
    with pytest.raises(BudgetExceededError, match="exceeds the budget"):
        min_distance_exhaustive(entries, field, budget=1 << 19)
    assert min_distance_exhaustive(entries, field, budget=1 << 20) == 1


def test_exhaustive_rejects_zero_matrix():
    with pytest.raises(ValueError):
        min_distance_exhaustive([[0, 0, 0]], GF(3))


def test_exhaustive_backends_agree():
    rng = random.Random(7)
    for q in (2, 3, 4, 5):
        field = GF(q)
        done = 0
        while done < 8:
            rows = rng.randrange(1, 4)
            cols = rng.randrange(2, 7)
            entries = [
                [rng.randrange(q) for _ in range(cols)] for _ in range(rows)
            ]
            basis = _row_basis(entries, field)
            if not basis:
                continue
            done += 1
            assert _exhaustive_py(basis, field) == _exhaustive_np(basis, field)


def test_random_upper_bounds_exhaustive(toy_triangle):
    field = GF(4)
    M = generator_matrix(toy_triangle, field)
    upper = min_weight_random_upper(M.entries, field, iterations=300, seed=5)
    assert upper >= min_distance_exhaustive(M.entries, field)
    again = min_weight_random_upper(M.entries, field, iterations=300, seed=5)
    assert upper == again
    with pytest.raises(ValueError):
        min_weight_random_upper([[0, 0]], field)


def test_unionfind_class_counts(toy_triangle, unit_square, segment01):
    assert reduction_class_count_unionfind(toy_triangle, GF(4)) == 5
    assert reduction_class_count_unionfind(unit_square.dilate(2), GF(2)) == 9
    assert reduction_class_count_unionfind(segment01, GF(2)) == 2
    assert reduction_class_count_unionfind(unit_square, GF(3)) == 4


def test_pick_check(toy_triangle, unit_square, quadrilateral):
    assert pick_check(toy_triangle)
    assert pick_check(unit_square)
    assert pick_check(quadrilateral)
    assert pick_check(toy_triangle.dilate(3))


def test_pick_check_requires_dimension_two(segment01, cube):
    with pytest.raises(ValueError):
        pick_check(segment01)
    with pytest.raises(ValueError):
        pick_check(cube)


def test_pick_check_on_random_hulls():
    rng = random.Random(2)
    from projtoric.polytope import PolytopeError

    built = 0
    while built < 30:
        pts = [
            (rng.randint(-5, 5), rng.randint(-5, 5))
            for _ in range(rng.randint(3, 7))
        ]
        try:
            P = Polytope.from_vertices(pts)
        except PolytopeError:
            continue
        built += 1
        assert pick_check(P)
