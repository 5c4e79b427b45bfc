"""Built-in complex families and the random generator."""

import pytest

from morsematch import (
    amplified,
    betti_gf2,
    critical_profile,
    dunce_hat,
    euler_characteristic,
    from_maximal_simplices,
    full_simplex,
    is_connected,
    random_complex,
    rp2,
    simplex_boundary,
    wedge,
)


def test_simplex_boundary_smallest_case():
    K, matching = simplex_boundary(2)
    assert K.n == 6
    assert matching.acyclic
    assert critical_profile(K, matching.pairs).counts == (1, 1)


def test_simplex_boundary_sphere():
    K, matching = simplex_boundary(3)
    assert K.n == 14
    assert critical_profile(K, matching.pairs).counts == (1, 0, 1)
    matched = {s for p in matching.pairs for s in p}
    assert (1,) not in matched
    assert (2, 3, 4) not in matched


@pytest.mark.parametrize("n", range(2, 9))
def test_simplex_boundary_matching_is_acyclic(n):
    K, matching = simplex_boundary(n)
    assert matching.acyclic
    assert critical_profile(K, matching.pairs).total == 2
    assert K.n == 2 ** (n + 1) - 2


def test_simplex_boundary_rejects_degenerate_input():
    with pytest.raises(ValueError, match="at least 1"):
        simplex_boundary(0)


def test_full_simplex_counts():
    assert full_simplex(0).n == 1
    assert full_simplex(2).n == 7
    assert full_simplex(3).n == 15
    assert euler_characteristic(full_simplex(4)) == 1


def test_rp2_triangulation():
    K = rp2()
    assert tuple(len(K.by_dim[d]) for d in range(3)) == (6, 15, 10)
    assert euler_characteristic(K) == 1
    assert betti_gf2(K) == (1, 1, 1)
    assert is_connected(K)


def test_dunce_hat_triangulation():
    K = dunce_hat()
    assert tuple(len(K.by_dim[d]) for d in range(3)) == (8, 24, 17)
    assert euler_characteristic(K) == 1
    assert betti_gf2(K) == (1, 0, 0)


def test_dunce_hat_has_no_free_edge():
    K = dunce_hat()
    for edge in K.by_dim[1]:
        assert len(K.cofacets_of(edge)) != 1


def test_wedge_size_and_homology():
    K = dunce_hat()
    W = wedge(K, 1, 3)
    assert W.n == (K.n - 1) * 3 + 1
    assert betti_gf2(W) == (1, 0, 0)
    assert is_connected(W)


def test_wedge_of_circles():
    circle = from_maximal_simplices([(0, 1), (1, 2), (0, 2)])
    W = wedge(circle, 0, 2)
    assert W.n == 11
    assert betti_gf2(W) == (1, 2)
    assert wedge(circle, 0, 6).n == 31


def test_wedge_single_copy_is_identity():
    K = rp2()
    assert wedge(K, 1, 1) == K


def test_wedge_input_checks():
    K = rp2()
    with pytest.raises(ValueError, match="not a vertex"):
        wedge(K, 99, 2)
    with pytest.raises(ValueError, match="at least 1"):
        wedge(K, 1, 0)


def test_amplified_grows_geometrically():
    edge = from_maximal_simplices([(0, 1)])
    A = amplified(edge, 0, 2)
    assert A.n == 7
    assert len(A.facets()) == 3


def test_amplified_respects_cap():
    with pytest.raises(ValueError, match="over the cap"):
        amplified(dunce_hat(), 1, 2, cap=10)


def test_random_complex_is_deterministic():
    assert random_complex(7) == random_complex(7)
    assert random_complex(7) != random_complex(8)


def test_random_complex_shape_controls():
    K = random_complex(3, dim=3, n_vertices=9, n_facets=5)
    assert K.dim <= 3
    assert len(K.vertices) <= 9
    conn = random_complex(3, connected=True)
    assert is_connected(conn)


def test_random_complex_argument_validation():
    with pytest.raises(ValueError, match="dim must be"):
        random_complex(0, dim=5)
    with pytest.raises(ValueError, match="at least dim\\+1"):
        random_complex(0, dim=3, n_vertices=2)
    with pytest.raises(ValueError, match="at least one facet"):
        random_complex(0, n_facets=0)


def test_random_complexes_are_valid_complexes():
    from morsematch import facets_of

    for seed in range(20):
        K = random_complex(seed)
        for s in K:
            if len(s) > 1:
                for f in facets_of(s):
                    assert f in K
