"""Hasse diagrams of face posets and matchings on their covering graphs.

Edges of the Hasse diagram join each simplex to its codimension-1 faces.
A matching selects disjoint covering pairs; orienting the diagram by a
matching points matched edges up (face to coface) and everything else
down.
"""
from __future__ import annotations

from collections import deque

from .complexes import Simplex, SimplicialComplex, canonical_key, facets_of

Pair = tuple[Simplex, Simplex]


class HasseDiagram:
    """Covering graph of a complex, one edge per covering pair."""

    __slots__ = ("complex", "edges")

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        edges = []
        for tau in K.simplices:
            for sigma in facets_of(tau):
                edges.append((tau, sigma))
        self.edges: tuple[tuple[Simplex, Simplex], ...] = tuple(edges)

    @property
    def nodes(self) -> tuple[Simplex, ...]:
        return self.complex.simplices

    def __repr__(self) -> str:
        return f"HasseDiagram(nodes={len(self.nodes)}, edges={len(self.edges)})"


def hasse(K: SimplicialComplex) -> HasseDiagram:
    return HasseDiagram(K)


class Interface:
    """Nodes and directed edges of one d-interface."""

    __slots__ = ("d", "nodes", "edges")

    def __init__(self, d, nodes, edges):
        self.d = d
        self.nodes = nodes
        self.edges = edges


def d_interface(H, d: int) -> Interface:
    """Restriction of a (possibly oriented) Hasse diagram to dimensions d-1, d."""
    K = H.complex
    if not 1 <= d <= K.dim:
        raise ValueError(f"interface dimension {d} out of range 1..{K.dim}")
    nodes = K.by_dim[d - 1] + K.by_dim[d]
    edges = []
    oriented = isinstance(H, OrientedHasse)
    for tau in K.by_dim[d]:
        for sigma in facets_of(tau):
            if oriented and H.is_up(sigma, tau):
                edges.append((sigma, tau))
            else:
                edges.append((tau, sigma))
    return Interface(d, tuple(nodes), tuple(edges))


def max_cardinality_matching(H: HasseDiagram) -> frozenset[Pair]:
    """Maximum matching on the covering graph by alternating-path augmentation.

    The graph is bipartite between even and odd dimensions.  Scan order is
    fixed, augmenting from even-dimension nodes top dimension first and
    lexicographic within one, with adjacency in canonical order, so ties
    between maximum matchings resolve the same way on every run.  Seeding
    from the top tends to leave the leftover matching closer to acyclic.
    """
    K = H.complex
    adj: dict[Simplex, tuple[Simplex, ...]] = {}
    for s in K.simplices:
        nbrs = [f for f in facets_of(s)] + list(K.cofacets_of(s))
        adj[s] = tuple(sorted(nbrs, key=canonical_key))
    left = sorted(
        (s for s in K.simplices if len(s) % 2 == 1),
        key=lambda s: (-len(s), s),
    )
    match: dict[Simplex, Simplex] = {}
    for u in left:
        if u in match:
            continue
        prev: dict[Simplex, Simplex] = {}
        seen = {u}
        q = deque([u])
        end = None
        while q and end is None:
            x = q.popleft()
            for y in adj[x]:
                if y in prev:
                    continue
                prev[y] = x
                z = match.get(y)
                if z is None:
                    end = y
                    break
                if z not in seen:
                    seen.add(z)
                    q.append(z)
        if end is None:
            continue
        y = end
        while y is not None:
            x = prev[y]
            nxt = match.get(x)
            match[x] = y
            match[y] = x
            y = nxt
    pairs = set()
    for a, b in match.items():
        if len(a) < len(b):
            pairs.add((a, b))
    return frozenset(pairs)


def validate_matching(K: SimplicialComplex, pairs) -> frozenset[Pair]:
    """Check pairs form a matching by covering relations; return them frozen."""
    seen: set[Simplex] = set()
    out = set()
    for sigma, tau in pairs:
        if sigma not in K:
            raise ValueError(f"unknown simplex {sigma}")
        if tau not in K:
            raise ValueError(f"unknown simplex {tau}")
        if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
            raise ValueError(f"not a covering pair: {sigma} -> {tau}")
        if sigma in seen:
            raise ValueError(f"simplex matched twice: {sigma}")
        if tau in seen:
            raise ValueError(f"simplex matched twice: {tau}")
        seen.add(sigma)
        seen.add(tau)
        out.add((sigma, tau))
    return frozenset(out)


class OrientedHasse:
    """Hasse diagram oriented by a matching: matched covering pairs point up.

    The orientation is mutable in one direction only; unmatching a pair
    turns its up-edge back into a down-edge.  Algorithms that repair
    matchings rely on this.
    """

    __slots__ = ("hasse", "complex", "_partner")

    def __init__(self, H: HasseDiagram, pairs):
        self.hasse = H
        self.complex = H.complex
        self._partner: dict[Simplex, Simplex] = {}
        for sigma, tau in pairs:
            self._partner[sigma] = tau
            self._partner[tau] = sigma

    def is_up(self, sigma: Simplex, tau: Simplex) -> bool:
        return self._partner.get(sigma) == tau

    def partner_of(self, s: Simplex):
        return self._partner.get(s)

    def up_partner(self, s: Simplex):
        """The coface s is matched to, or None."""
        p = self._partner.get(s)
        if p is not None and len(p) > len(s):
            return p
        return None

    def up_pairs(self) -> list[Pair]:
        out = [
            (s, t) for s, t in self._partner.items() if len(s) < len(t)
        ]
        out.sort(key=lambda p: canonical_key(p[0]))
        return out

    @property
    def pairs(self) -> frozenset[Pair]:
        return frozenset(self.up_pairs())

    def unmatch(self, sigma: Simplex, tau: Simplex) -> None:
        """Reverse the up-edge of a matched pair."""
        if not self.is_up(sigma, tau):
            raise ValueError(f"not an up-edge: {sigma} -> {tau}")
        del self._partner[sigma]
        del self._partner[tau]

    def oriented_edge(self, tau: Simplex, sigma: Simplex) -> tuple[Simplex, Simplex]:
        return (sigma, tau) if self.is_up(sigma, tau) else (tau, sigma)


def orient(H: HasseDiagram, pairs) -> OrientedHasse:
    """Orient a Hasse diagram by a matching, validating the matching first."""
    return OrientedHasse(H, validate_matching(H.complex, pairs))
