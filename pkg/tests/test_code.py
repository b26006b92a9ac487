import itertools

import pytest
from hypothesis import given, settings, strategies as st

from projtoric.code import (
    OrderSpec,
    SurjectivityError,
    best_bound_over_orders,
    block_matrix,
    dimension,
    distance_lower_bound,
    distance_lower_bound_details,
    find_surjective_dilate,
    generator_matrix,
    is_surjective,
    ordered_lattice_points,
    projective_reduction,
    stock_orders,
    subcode_matrix,
    toric_generator_matrix,
    toric_reduction,
)
from projtoric.gf import GF
from projtoric.oracle import rank_gf
from projtoric.polytope import Polytope
from projtoric.variety import HypothesisError, build_flags, flag_assignment


coords = st.integers(-20, 20)
point2 = st.tuples(coords, coords)

ORDERS2 = [
    OrderSpec.lex(),
    OrderSpec.grlex(),
    OrderSpec.permlex((1, 0)),
    OrderSpec.wlex((2, 3)),
]


@settings(deadline=None, max_examples=150)
@given(point2, point2, point2)
def test_orders_respect_addition(a, b, c):
    for order in ORDERS2:
        if order.key(a) < order.key(b):
            shifted_a = tuple(x + y for x, y in zip(a, c))
            shifted_b = tuple(x + y for x, y in zip(b, c))
            assert order.key(shifted_a) < order.key(shifted_b)


def test_order_validation():
    with pytest.raises(ValueError, match="unknown order kind"):
        OrderSpec("fancy")
    with pytest.raises(ValueError, match="not a permutation"):
        OrderSpec.permlex((0, 2))
    with pytest.raises(ValueError, match="weight vector"):
        OrderSpec("wlex")


def test_order_names():
    assert OrderSpec.lex().name == "lex"
    assert OrderSpec.grlex().name == "grlex"
    assert OrderSpec.permlex((1, 0)).name == "permlex:1,0"
    assert OrderSpec.wlex((2, 3)).name == "wlex:2,3"


def test_stock_orders():
    assert [o.name for o in stock_orders(1)] == ["lex", "grlex"]
    assert [o.name for o in stock_orders(2)] == ["lex", "grlex", "permlex:1,0"]


def test_ordered_lattice_points_follow_faces(toy_triangle):
    pts = ordered_lattice_points(toy_triangle)
    assert sorted(pts) == sorted(toy_triangle.lattice_points)
    assert pts == ((-1, 2), (0, 1), (-2, 3), (0, 0), (1, 0))


def test_segment_matrix_frozen(segment01):
    M = generator_matrix(segment01, GF(3))
    assert M.shape == (2, 4)
    assert M.entries == ((1, 1, 1, 0), (1, 2, 0, 1))
    assert M.row_points == ((0,), (1,))
    assert M.block_widths == (2, 1, 1)
    assert M.torus_columns() == (0, 1)


def test_toy_matrix_shape_and_rank(toy_triangle):
    field = GF(4)
    M = generator_matrix(toy_triangle, field)
    assert M.shape == (5, 21)
    assert M.block_widths == (9, 3, 3, 3, 1, 1, 1)
    assert M.q == 4
    assert rank_gf(M.entries, field) == 5


def test_structural_violations_empty(toy_triangle, quadrilateral, hirzebruch):
    cases = [(toy_triangle, 4), (quadrilateral, 5), (hirzebruch, 7)]
    for P, q in cases:
        assert generator_matrix(P, GF(q)).structural_violations() == []


def test_matrix_requires_hypotheses(quadrilateral):
    with pytest.raises(HypothesisError):
        generator_matrix(quadrilateral, GF(7))
    with pytest.raises(HypothesisError):
        toric_generator_matrix(quadrilateral, GF(7))


def test_toric_matrix_segment(segment01):
    assert toric_generator_matrix(segment01, GF(3)) == ((1, 1), (1, 2))


def test_toric_matrix_reed_solomon():
    # [0,3] over F5 evaluates 1, x, x^2, x^3 at the four units
    P = Polytope.from_vertices([(0,), (3,)])
    field = GF(5)
    T = toric_generator_matrix(P, field)
    assert len(T) == 4 and len(T[0]) == 4
    assert rank_gf(T, field) == 4


def test_toric_matrix_square_invertible(unit_square):
    field = GF(3)
    T = toric_generator_matrix(unit_square, field)
    assert len(T) == 4 and len(T[0]) == 4
    assert rank_gf(T, field) == 4


def _lead_normalized_columns(entries, field):
    cols = []
    for j in range(len(entries[0])):
        col = tuple(row[j] for row in entries)
        lead = next((x for x in col if x), None)
        assert lead is not None
        s = field.inv(lead)
        cols.append(tuple(field.mul(s, x) for x in col))
    return sorted(cols)


def test_torus_block_matches_toric_matrix(toy_triangle, unit_square, hirzebruch):
    # straightening rescales each torus column by a unit and permutes
    # the columns, so the lead-normalized column multisets coincide
    cases = [(toy_triangle, 4), (unit_square, 3), (hirzebruch, 7)]
    for P, q in cases:
        field = GF(q)
        M = generator_matrix(P, field)
        torus = [
            tuple(row[j] for j in M.torus_columns()) for row in M.entries
        ]
        T = toric_generator_matrix(P, field)
        assert _lead_normalized_columns(torus, field) == \
            _lead_normalized_columns(T, field)
        assert rank_gf(torus, field) == rank_gf(T, field)


def test_face_blocks_match_toric_reduction(toy_triangle, hirzebruch):
    # puncturing to one face block keeps exactly the classes of the
    # straightened exponents on that face
    for P, q in ((toy_triangle, 4), (hirzebruch, 7)):
        field = GF(q)
        assign = flag_assignment(P, build_flags(P))
        for Q in P.faces:
            flag = assign[Q]
            B = block_matrix(P, Q, flag, field)
            on_face = [
                flag.exponents(m)[: Q.dim]
                for m in P.lattice_points
                if P.face_contains(Q, m)
            ]
            assert rank_gf(B, field) == len(toric_reduction(on_face, field))


def test_block_matrix_rejects_foreign_face(toy_triangle, unit_square):
    flag = build_flags(toy_triangle)[0]
    with pytest.raises(ValueError):
        block_matrix(toy_triangle, unit_square.faces[0], flag, GF(4))


def test_projective_reduction_toy(toy_triangle):
    red = projective_reduction(toy_triangle, GF(4))
    assert red.representatives == ((-1, 2), (0, 1), (-2, 3), (0, 0), (1, 0))
    assert set(red.mapping) == set(toy_triangle.lattice_points)
    assert all(red.mapping[m] == m for m in toy_triangle.lattice_points)


def test_projective_reduction_dilated_toy_interior(toy_triangle):
    # 9 torus classes would be needed; only 8 distinct ones appear
    P4 = toy_triangle.dilate(4)
    red = projective_reduction(P4, GF(4))
    top = P4.faces[0]
    interior = set(P4.interior_lattice_points(top))
    assert sum(1 for r in red.representatives if r in interior) == 8


def test_projective_reduction_segment():
    P = Polytope.from_vertices([(0,), (3,)])
    red = projective_reduction(P, GF(3))
    assert red.representatives == ((1,), (2,), (0,), (3,))
    assert red.mapping[(1,)] == (1,)
    assert red.mapping[(2,)] == (2,)


def test_reduction_respects_order_choice(toy_triangle):
    P5 = toy_triangle.dilate(5)
    field = GF(4)
    sizes = set()
    for order in stock_orders(2):
        red = projective_reduction(P5, field, order=order)
        sizes.add(len(red.representatives))
        for rep in red.representatives:
            cls = [m for m, r in red.mapping.items() if r == rep]
            assert min(cls, key=order.key) == rep
    assert len(sizes) == 1


def test_toric_reduction():
    field = GF(4)
    assert toric_reduction([(i,) for i in range(10)], field) == ((0,), (1,), (2,))
    assert toric_reduction([(0, 0)], field) == ((0, 0),)
    assert toric_reduction([], field) == ()


def test_dimension(toy_triangle, unit_square, segment01, hirzebruch):
    assert dimension(toy_triangle, GF(4)) == 5
    assert dimension(unit_square, GF(3)) == 4
    assert dimension(segment01, GF(3)) == 2
    assert dimension(hirzebruch, GF(7)) == 18


def test_dimension_requires_hypotheses(quadrilateral):
    with pytest.raises(HypothesisError):
        dimension(quadrilateral, GF(7))
    assert dimension(quadrilateral, GF(5)) == len(
        projective_reduction(quadrilateral, GF(5)).representatives
    )


def test_is_surjective(toy_triangle, segment01, unit_square):
    field = GF(4)
    assert not is_surjective(toy_triangle.dilate(4), toy_triangle, field)
    assert is_surjective(toy_triangle.dilate(5), toy_triangle, field)
    big = Polytope.from_vertices([(0,), (3,)])
    assert is_surjective(big, segment01, GF(3))
    # over F2 the doubled square already separates all 9 classes
    assert is_surjective(unit_square.dilate(2), unit_square, GF(2))


def test_is_surjective_rejects_different_fans(toy_triangle, unit_square):
    assert not is_surjective(unit_square, toy_triangle, GF(4))


def test_find_surjective_dilate(toy_triangle, segment01, unit_square):
    assert find_surjective_dilate(toy_triangle, GF(4), lambda_max=10) == 5
    assert find_surjective_dilate(segment01, GF(3)) == 3
    assert find_surjective_dilate(unit_square, GF(2)) == 2
    assert find_surjective_dilate(toy_triangle, GF(4), lambda_max=2) is None


def test_distance_bound_toy(toy_triangle):
    field = GF(4)
    big = toy_triangle.dilate(5)
    details = distance_lower_bound_details(toy_triangle, big, field)
    assert details.bound == 8
    assert details.reduced == ((-1, 2), (0, 1), (-2, 3), (0, 0), (1, 0))
    assert details.counts == (12, 8, 16, 16, 8)
    assert details.attained_at() == ((0, 1), (1, 0))
    assert distance_lower_bound(toy_triangle, big, field) == 8


def test_distance_bound_segment(segment01):
    big = Polytope.from_vertices([(0,), (3,)])
    assert distance_lower_bound(segment01, big, GF(3)) == 3


def test_distance_bound_requires_surjective(toy_triangle):
    with pytest.raises(SurjectivityError):
        distance_lower_bound(toy_triangle, toy_triangle, GF(4))
    with pytest.raises(SurjectivityError):
        distance_lower_bound_details(
            toy_triangle, toy_triangle.dilate(4), GF(4)
        )


def test_best_bound_over_orders(toy_triangle, unit_square):
    field = GF(4)
    big = toy_triangle.dilate(5)
    best, order = best_bound_over_orders(toy_triangle, big, field)
    assert best == 8
    lex = OrderSpec.lex()
    single, chosen = best_bound_over_orders(
        toy_triangle, big, field, orders=[lex]
    )
    assert single == distance_lower_bound(toy_triangle, big, field, lex)
    assert chosen == lex
    with pytest.raises(ValueError):
        best_bound_over_orders(toy_triangle, big, field, orders=[])
    # the square is symmetric in the two coordinates
    sq_field = GF(3)
    sq_big = unit_square.dilate(find_surjective_dilate(unit_square, sq_field))
    a = distance_lower_bound(unit_square, sq_big, sq_field, OrderSpec.lex())
    b = distance_lower_bound(
        unit_square, sq_big, sq_field, OrderSpec.permlex((1, 0))
    )
    assert a == b


def test_subcode_matrix(toy_triangle):
    field = GF(4)
    M = generator_matrix(toy_triangle, field)
    assert subcode_matrix(M) == M.entries
    torus = M.torus_columns()
    sub = subcode_matrix(M, rows=[(0, 1), (1, 0)], cols=torus)
    assert len(sub) == 2 and len(sub[0]) == 9
    assert rank_gf(sub, field) == 2
    with pytest.raises(ValueError, match="not a row"):
        subcode_matrix(M, rows=[(9, 9)])
    with pytest.raises(ValueError):
        subcode_matrix(M, cols=[999])
    with pytest.raises(ValueError, match="empty"):
        subcode_matrix(M, rows=[])


def test_duplicate_class_rows_are_kept():
    # [0,4] over F3 has five rows but only four distinct classes
    P = Polytope.from_vertices([(0,), (4,)])
    field = GF(3)
    M = generator_matrix(P, field)
    assert M.shape[0] == 5
    assert rank_gf(M.entries, field) == 4
    assert dimension(P, field) == 4


def test_flag_choice_does_not_change_matrix_rank(toy_triangle, hirzebruch):
    for P, q in ((toy_triangle, 4), (hirzebruch, 7)):
        field = GF(q)
        forward = generator_matrix(P, field, flags=build_flags(P))
        backward = generator_matrix(
            P, field, flags=build_flags(P, reverse=True)
        )
        assert forward.shape == backward.shape
        assert rank_gf(forward.entries, field) == \
            rank_gf(backward.entries, field)
