"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive and self-contained: subset tests
instead of incidence caches, exhaustive search instead of augmenting
paths, dense numpy arithmetic for ranks.  Slow is fine at test scale;
what matters is that none of it shares code paths with the package.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

import numpy as np

from morsematch import (
    SimplicialComplex,
    coreduction_matching,
    dunce_hat,
    from_maximal_simplices,
    frontier_edges_matching,
    reduction_matching,
    rp2,
)

Simplex = tuple[int, ...]
Pair = tuple[Simplex, Simplex]


def covering_pairs(simplices) -> list[Pair]:
    """All (face, coface) covering pairs, found by pairwise subset tests."""
    out = []
    by_len = defaultdict(list)
    for s in simplices:
        by_len[len(s)].append(s)
    for k, faces in sorted(by_len.items()):
        for t in by_len.get(k + 1, ()):
            tset = set(t)
            for s in faces:
                if set(s) < tset:
                    out.append((s, t))
    return out


def brute_max_matching_size(simplices) -> int:
    """Exact maximum matching on the covering graph by subset enumeration.

    Dynamic programming over bitmasks of matched nodes; exponential in
    the number of simplices, so callers keep inputs at or below 16.
    """
    nodes = sorted(simplices, key=lambda s: (len(s), s))
    if len(nodes) > 20:
        raise ValueError("brute force limited to 20 simplices")
    index = {s: i for i, s in enumerate(nodes)}
    adj: list[list[int]] = [[] for _ in nodes]
    for sigma, tau in covering_pairs(nodes):
        adj[index[sigma]].append(index[tau])
        adj[index[tau]].append(index[sigma])
    n = len(nodes)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        i = 0
        while i < n and mask >> i & 1:
            i += 1
        if i == n:
            return 0
        mask |= 1 << i
        top = best(mask)
        for j in adj[i]:
            if not mask >> j & 1:
                top = max(top, 1 + best(mask | 1 << j))
        return top

    size = best(0)
    best.cache_clear()
    return size


def oriented_adjacency(simplices, pairs) -> dict[Simplex, list[Simplex]]:
    """Whole-graph orientation: matched covering edges up, the rest down."""
    matched = set(pairs)
    adj: dict[Simplex, list[Simplex]] = defaultdict(list)
    for sigma, tau in covering_pairs(simplices):
        if (sigma, tau) in matched:
            adj[sigma].append(tau)
        else:
            adj[tau].append(sigma)
    return adj


def has_directed_cycle(adj) -> bool:
    """Plain three-color depth-first search over the full digraph."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict = defaultdict(int)
    for root in list(adj):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(adj.get(root, ())))]
        color[root] = GRAY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
            elif color[nxt] == GRAY:
                return True
            elif color[nxt] == WHITE:
                color[nxt] = GRAY
                stack.append((nxt, iter(adj.get(nxt, ()))))
    return False


def _rank_gf2(mat: np.ndarray) -> int:
    m = mat.astype(np.uint8).copy()
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
        if r == rows:
            break
    return r


def betti_numpy(simplices) -> tuple[int, ...]:
    """Mod-2 Betti numbers from dense numpy boundary matrices."""
    by_dim: dict[int, list[Simplex]] = defaultdict(list)
    for s in simplices:
        by_dim[len(s) - 1].append(s)
    top = max(by_dim)
    ranks = {}
    for d in range(1, top + 1):
        rows = {s: i for i, s in enumerate(sorted(by_dim[d - 1]))}
        cols = sorted(by_dim[d])
        mat = np.zeros((len(rows), len(cols)), dtype=np.uint8)
        for j, t in enumerate(cols):
            for k in range(len(t)):
                mat[rows[t[:k] + t[k + 1 :]], j] = 1
        ranks[d] = _rank_gf2(mat)
    out = []
    for d in range(top + 1):
        out.append(len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return tuple(out)


def replay_collapses(simplices, sequence) -> frozenset[Simplex]:
    """Execute elementary collapses, re-verifying freeness at every step.

    A step (sigma, tau) is legal only when tau is the one remaining
    proper coface of sigma, of any codimension.  Returns what remains.
    """
    remaining = set(simplices)
    for sigma, tau in sequence:
        assert sigma in remaining, f"{sigma} already removed"
        assert tau in remaining, f"{tau} already removed"
        sset = set(sigma)
        cofaces = [t for t in remaining if len(t) > len(sigma) and sset < set(t)]
        assert cofaces == [tau] or set(cofaces) == {tau}, (
            f"{sigma} is not free: cofaces {sorted(cofaces)}"
        )
        remaining.discard(sigma)
        remaining.discard(tau)
    return frozenset(remaining)


def euler(simplices) -> int:
    return sum(-1 if len(s) % 2 == 0 else 1 for s in simplices)


def profile_of(K: SimplicialComplex, pairs) -> tuple[int, ...]:
    """Critical counts recomputed from scratch."""
    matched = {s for p in pairs for s in p}
    counts = [0] * (K.dim + 1)
    for s in K.simplices:
        if s not in matched:
            counts[len(s) - 1] += 1
    return tuple(counts)


def named_complexes() -> dict[str, SimplicialComplex]:
    """Fixed corpus reused across the suite."""
    return {
        "vertex": from_maximal_simplices([(0,)]),
        "edge": from_maximal_simplices([(0, 1)]),
        "path2": from_maximal_simplices([(0, 1), (1, 2)]),
        "circle": from_maximal_simplices([(0, 1), (1, 2), (0, 2)]),
        "triangle": from_maximal_simplices([(0, 1, 2)]),
        "two_triangles": from_maximal_simplices([(0, 1, 2), (1, 2, 3)]),
        "sphere": from_maximal_simplices(
            [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        ),
        "tetrahedron": from_maximal_simplices([(1, 2, 3, 4)]),
        "rp2": rp2(),
        "dunce": dunce_hat(),
    }


def all_algorithms():
    """Every matching producer in the package, normalized to pair sets."""
    return {
        "frontier": lambda K: frontier_edges_matching(K).morse.pairs,
        "coreduction": lambda K: coreduction_matching(K).pairs,
        "reduction": lambda K: reduction_matching(K).pairs,
    }
