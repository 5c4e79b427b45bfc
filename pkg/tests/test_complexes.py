"""Core complex construction, incidence queries, and mod-2 homology."""

import pytest

from morsematch import (
    betti_gf2,
    boundary_matrix_gf2,
    canonical_key,
    dim_of,
    euler_characteristic,
    facets_of,
    from_maximal_simplices,
    gf2_rank,
    is_connected,
    simplex,
)
from helpers import betti_numpy, euler, named_complexes


def test_simplex_sorts_and_validates():
    assert simplex([2, 0, 1]) == (0, 1, 2)
    assert simplex((5,)) == (5,)
    with pytest.raises(ValueError, match="empty simplex"):
        simplex([])
    with pytest.raises(ValueError, match="degenerate facet"):
        simplex([1, 1, 2])
    with pytest.raises(ValueError, match="bad vertex id"):
        simplex(["a"])


def test_canonical_key_orders_by_dimension_then_lex():
    items = [(2,), (0, 1), (1,), (0, 1, 2), (0, 2)]
    ordered = sorted(items, key=canonical_key)
    assert ordered == [(1,), (2,), (0, 1), (0, 2), (0, 1, 2)]


def test_from_maximal_simplices_closes_downward():
    circle = from_maximal_simplices([(0, 1), (1, 2), (0, 2)])
    assert len(circle) == 6
    triangle = from_maximal_simplices([(0, 1, 2)])
    assert len(triangle) == 7
    point = from_maximal_simplices([(0,), (0,)])
    assert len(point) == 1
    with pytest.raises(ValueError, match="empty complex"):
        from_maximal_simplices([])


def test_membership_and_vertices():
    K = from_maximal_simplices([(0, 1, 2)])
    assert (0, 1) in K
    assert (0, 1, 2) in K
    assert (3,) not in K
    assert K.vertices == (0, 1, 2)
    assert K.dim == 2 and K.n == 7


def test_facets_of_is_lexicographic():
    assert facets_of((0, 1, 2)) == [(0, 1), (0, 2), (1, 2)]
    assert facets_of((3, 7)) == [(3,), (7,)]
    assert facets_of((0,)) == []
    assert dim_of((0, 1, 2)) == 2


def test_cofacets_of():
    K = from_maximal_simplices([(0, 1, 2), (1, 2, 3)])
    assert K.cofacets_of((1, 2)) == ((0, 1, 2), (1, 2, 3))
    assert K.cofacets_of((0, 1, 2)) == ()
    circle = from_maximal_simplices([(0, 1), (1, 2), (0, 2)])
    assert circle.cofacets_of((0,)) == ((0, 1), (0, 2))
    with pytest.raises(ValueError, match="unknown simplex"):
        K.cofacets_of((9,))


def test_facets_returns_maximal_simplices():
    K = from_maximal_simplices([(0, 1, 2), (2, 3)])
    assert K.facets() == ((2, 3), (0, 1, 2))


@pytest.mark.parametrize(
    "maximal, chi",
    [
        ([(0, 1, 2)], 1),
        ([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)], 2),
        ([(0, 1), (1, 2), (0, 2)], 0),
    ],
)
def test_euler_characteristic(maximal, chi):
    assert euler_characteristic(from_maximal_simplices(maximal)) == chi


def test_boundary_matrix_shape_and_rank():
    K = from_maximal_simplices([(0, 1, 2)])
    rows = boundary_matrix_gf2(K, 1)
    assert len(rows) == 3
    assert gf2_rank(rows) == 2
    with pytest.raises(ValueError, match="no boundary matrix"):
        boundary_matrix_gf2(K, 5)


def test_betti_point_sphere_projective_plane():
    from morsematch import rp2

    point = from_maximal_simplices([(0,)])
    assert betti_gf2(point) == (1,)
    sphere = from_maximal_simplices([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert betti_gf2(sphere) == (1, 0, 1)
    assert betti_gf2(rp2()) == (1, 1, 1)


def test_betti_matches_numpy_reference():
    for name, K in named_complexes().items():
        assert betti_gf2(K) == betti_numpy(K.simplices), name


def test_euler_equals_alternating_betti_sum():
    for name, K in named_complexes().items():
        beta = betti_gf2(K)
        total = sum((-1) ** i * b for i, b in enumerate(beta))
        assert euler_characteristic(K) == total == euler(K.simplices), name


def test_downward_closure_and_incidence_consistency():
    for name, K in named_complexes().items():
        for s in K:
            if len(s) > 1:
                for f in facets_of(s):
                    assert f in K, (name, s, f)
        for s in K:
            for t in K.cofacets_of(s):
                assert s in facets_of(t), (name, s, t)


def test_is_connected():
    assert is_connected(from_maximal_simplices([(0, 1), (1, 2)]))
    assert not is_connected(from_maximal_simplices([(0, 1), (2, 3)]))
    assert is_connected(from_maximal_simplices([(4,)]))


def test_complex_equality_and_hash():
    a = from_maximal_simplices([(0, 1, 2)])
    b = from_maximal_simplices([(0, 1), (0, 1, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != from_maximal_simplices([(0, 1)])
