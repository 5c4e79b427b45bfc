"""Named complexes and deterministic random ones for tests and benchmarks."""
from __future__ import annotations

import random
from itertools import combinations

from .complexes import (
    SimplicialComplex,
    from_maximal_simplices,
)
from .morse import MorseMatching, certify

# Minimal projective plane: 6 vertices, full K6 1-skeleton, 10 triangles,
# every edge in exactly two of them and every vertex link a 5-cycle.
RP2_FACETS = (
    (0, 1, 2), (0, 1, 5), (0, 2, 3), (0, 3, 4), (0, 4, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
)

# Dunce hat on 8 vertices and 17 triangles.  Obtained by triangulating a
# disk whose boundary runs 1,2,3 three times and gluing the three arcs:
# sides A->B, B->C, A->C of a subdivided triangle all map to the path
# 1->2->3->1, the five interior points become vertices 4..8.  Contractible
# (mod-2 and mod-3 homology of a point) with no free face at all.
DUNCE_HAT_FACETS = (
    (1, 2, 4), (1, 2, 5), (1, 2, 8), (1, 3, 6), (1, 3, 7), (1, 3, 8),
    (1, 4, 5), (1, 6, 7), (2, 3, 4), (2, 3, 5), (2, 3, 7), (2, 7, 8),
    (3, 4, 8), (3, 5, 6), (4, 5, 6), (4, 6, 7), (4, 7, 8),
)


def simplex_boundary(n: int) -> tuple[SimplicialComplex, MorseMatching]:
    """Boundary of the n-simplex on vertices 1..n+1 with its standard matching.

    Every face not containing vertex 1 is paired with its extension by 1;
    only the vertex (1,) and the opposite facet (2,...,n+1) stay critical.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    verts = tuple(range(1, n + 2))
    faces = [c for k in range(1, n + 1) for c in combinations(verts, k)]
    K = SimplicialComplex(faces)
    rest = verts[1:]
    pairs = set()
    for k in range(1, n):
        for S in combinations(rest, k):
            pairs.add((S, tuple(sorted(S + (1,)))))
    return K, certify(K, pairs)


def full_simplex(n: int) -> SimplicialComplex:
    """The solid n-simplex on vertices 0..n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    verts = tuple(range(n + 1))
    return from_maximal_simplices([verts])


def rp2() -> SimplicialComplex:
    return from_maximal_simplices(RP2_FACETS)


def dunce_hat() -> SimplicialComplex:
    return from_maximal_simplices(DUNCE_HAT_FACETS)


def wedge(K: SimplicialComplex, p: int, copies: int) -> SimplicialComplex:
    """Glue the given number of relabeled copies of K at the vertex p.

    Copy j shifts every vertex except p by j times a fixed stride, so the
    copies share exactly the basepoint and nothing else.  The result has
    (n - 1) * copies + 1 simplices for an n-simplex input.
    """
    if (p,) not in K:
        raise ValueError(f"basepoint {p} is not a vertex of the complex")
    if copies < 1:
        raise ValueError("copies must be at least 1")
    stride = max(K.vertices) + 1
    out = []
    for j in range(copies):
        for f in K.facets():
            out.append(tuple(v if v == p else v + j * stride for v in f))
    return from_maximal_simplices(out)


def amplified(K: SimplicialComplex, p: int, c: int, cap: int = 20000) -> SimplicialComplex:
    """Wedge of n**(c-1) copies of K at p, n the simplex count of K.

    Any Morse matching on the result that stays below n**(c-1) + 1 critical
    simplices would certify K collapsible, which is what makes this body
    useful as a hardness amplifier.  Refuses to build past the size cap.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    copies = K.n ** (c - 1)
    total = (K.n - 1) * copies + 1
    if total > cap:
        raise ValueError(
            f"amplified complex would need {total} simplices, over the cap {cap}"
        )
    return wedge(K, p, copies)


def random_complex(
    seed: int,
    dim: int = 2,
    n_vertices: int = 10,
    n_facets: int = 8,
    connected: bool = False,
) -> SimplicialComplex:
    """Closure of random facets, reproducible from the seed.

    Facet sizes are drawn uniformly from 2..dim+1 on vertex ids below
    n_vertices.  With connected=True the components get chained together
    by extra edges between their smallest vertices.
    """
    if not 1 <= dim <= 4:
        raise ValueError("dim must be between 1 and 4")
    if n_vertices < dim + 1:
        raise ValueError("need at least dim+1 vertices")
    if n_facets < 1:
        raise ValueError("need at least one facet")
    rng = random.Random(seed)
    facets = []
    for _ in range(n_facets):
        k = rng.randint(2, dim + 1)
        facets.append(tuple(sorted(rng.sample(range(n_vertices), k))))
    K = from_maximal_simplices(facets)
    if not connected:
        return K
    adj: dict[int, list[int]] = {v: [] for v in K.vertices}
    if K.dim >= 1:
        for a, b in K.by_dim[1]:
            adj[a].append(b)
            adj[b].append(a)
    roots = []
    seen: set[int] = set()
    for root in K.vertices:
        if root in seen:
            continue
        roots.append(root)
        seen.add(root)
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    if len(roots) == 1:
        return K
    links = [(roots[i], roots[i + 1]) for i in range(len(roots) - 1)]
    return from_maximal_simplices(list(K.facets()) + links)
