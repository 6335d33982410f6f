"""Hereditary hypergraphs over bitmask vertex sets.

A hereditary hypergraph (independence system) on vertices 0..n-1 is closed
under taking nonempty subsets of its hyperedges, so it is fully determined
by its inclusion-maximal hyperedges.  This module stores exactly that
generator antichain and answers membership, vertex deletion, the graph of
two-element hyperedges, components and duality directly from it; the full
closure is never materialized.

Vertex sets are plain ints used as bitmasks (vertex v is bit ``1 << v``),
which caps structures at 64 vertices: plenty for exhaustive desk-scale
verification and fast for the exact solvers built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator

MAX_VERTICES = 64


class BadIndex(ValueError):
    """Vertex index outside the structure it was used with."""


class UncoveredVertex(ValueError):
    """A vertex of the ground set lies in no hyperedge."""

    def __init__(self, vertex: int) -> None:
        super().__init__(f"vertex {vertex} lies in no hyperedge")
        self.vertex = vertex


class VertexLimitExceeded(ValueError):
    """Structures are capped at MAX_VERTICES vertices (bitmask representation)."""


def vset(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    mask = 0
    for v in vertices:
        if not 0 <= v < MAX_VERTICES:
            raise BadIndex(f"vertex {v} out of range 0..{MAX_VERTICES - 1}")
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Unpack a bitmask into its sorted list of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertex indices of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_set(n: int) -> int:
    """Bitmask of the full vertex set {0..n-1}."""
    if n < 0 or n > MAX_VERTICES:
        raise VertexLimitExceeded(f"vertex count {n} not in 0..{MAX_VERTICES}")
    return (1 << n) - 1


def maximal_antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Reduce a family of sets to its inclusion-maximal members, deduplicated.

    The result is sorted by ascending mask value, the canonical generator
    order used throughout the package.
    """
    unique = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in unique:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class HereditaryHypergraph:
    """A hereditary hypergraph stored by its generator antichain.

    ``vertices`` is the bitmask of live vertices; after deletions it may be
    a proper subset of {0..space-1} so that results keep reporting in the
    original labels.  ``generators`` are the maximal hyperedges: a set X is
    a hyperedge exactly when it is nonempty and contained in a generator.
    """

    vertices: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.vertices < 0 or self.vertices.bit_length() > MAX_VERTICES:
            raise VertexLimitExceeded(
                f"vertex labels must fit in 0..{MAX_VERTICES - 1}"
            )
        gens = tuple(sorted(set(self.generators)))
        object.__setattr__(self, "generators", gens)
        union = 0
        for g in gens:
            if g == 0:
                raise ValueError("empty generator")
            if g & ~self.vertices:
                raise BadIndex(
                    f"generator {members(g)} uses vertices outside {members(self.vertices)}"
                )
            union |= g
        if union != self.vertices:
            missing = self.vertices & ~union
            raise UncoveredVertex(members(missing)[0])
        for i, g in enumerate(gens):
            for h in gens[i + 1 :]:
                if g & h == g or g & h == h:
                    raise ValueError(
                        f"generators {members(g)} and {members(h)} violate the antichain"
                    )

    @property
    def n(self) -> int:
        """Number of (live) vertices."""
        return self.vertices.bit_count()

    @property
    def space(self) -> int:
        """Size of the label space: one past the largest live label."""
        return self.vertices.bit_length()

    @cached_property
    def pair_adjacency(self) -> tuple[int, ...]:
        """For each label v, the bitmask of w with {v, w} a hyperedge.

        Two vertices are adjacent here exactly when they lie in a common
        generator, i.e. when the pair is a two-element hyperedge of the
        closure.
        """
        adj = [0] * self.space
        for g in self.generators:
            for v in iter_bits(g):
                adj[v] |= g & ~(1 << v)
        return tuple(adj)

    def is_hyperedge(self, x: int) -> bool:
        """True iff x is nonempty and contained in some generator."""
        if x & ~self.vertices:
            raise BadIndex(f"{members(x)} not within vertex set {members(self.vertices)}")
        if x == 0:
            return False
        return any(x & g == x for g in self.generators)

    def delete_vertex(self, v: int) -> "HereditaryHypergraph":
        """Remove vertex v from the vertex set and from every generator.

        Labels of the remaining vertices are preserved, so covers of the
        result read directly in the original coordinates.
        """
        bit = 1 << v
        if not self.vertices & bit:
            raise BadIndex(f"vertex {v} not in vertex set {members(self.vertices)}")
        gens = maximal_antichain(g & ~bit for g in self.generators if g & ~bit)
        return HereditaryHypergraph(self.vertices & ~bit, gens)

    def edge_graph(self) -> "Graph":
        """The graph whose edges are the two-element hyperedges."""
        pairs = set()
        for g in self.generators:
            vs = members(g)
            for i, u in enumerate(vs):
                for w in vs[i + 1 :]:
                    pairs.add((u, w))
        return Graph(self.space, frozenset(pairs))

    def components(self) -> tuple[int, ...]:
        """Partition of the vertex set into connected components.

        Connectivity is taken through the two-element hyperedges; components
        are returned as bitmasks ordered by their lowest vertex.
        """
        adj = self.pair_adjacency
        remaining = self.vertices
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                grown = 0
                for v in iter_bits(frontier):
                    grown |= adj[v]
                frontier = grown & self.vertices & ~comp
            comps.append(comp)
            remaining &= ~comp
        return tuple(comps)

    def is_connected(self) -> bool:
        """A hypergraph on at most one vertex counts as connected."""
        return len(self.components()) <= 1

    def compact(self) -> tuple["HereditaryHypergraph", tuple[int, ...]]:
        """Relabel live vertices onto 0..n-1.

        Returns the relabeled hypergraph together with the label table:
        entry i is the original label of new vertex i.
        """
        labels = tuple(members(self.vertices))
        position = {old: new for new, old in enumerate(labels)}
        gens = tuple(
            vset(position[v] for v in members(g)) for g in self.generators
        )
        return HereditaryHypergraph(full_set(len(labels)), maximal_antichain(gens)), labels


def from_hyperedges(
    n: int, hyperedges: Iterable[int | Iterable[int]]
) -> HereditaryHypergraph:
    """Build the hereditary closure of an explicit hyperedge list.

    Hyperedges may be given as bitmasks or as iterables of vertex indices.
    Empty hyperedges are dropped; the rest are reduced to their maximal
    antichain.  Every vertex of {0..n-1} must appear in some hyperedge.
    """
    if n < 0 or n > MAX_VERTICES:
        raise VertexLimitExceeded(f"vertex count {n} not in 0..{MAX_VERTICES}")
    space = full_set(n)
    masks = []
    for e in hyperedges:
        mask = e if isinstance(e, int) else vset(e)
        if mask & ~space:
            raise BadIndex(f"hyperedge {members(mask)} not within 0..{n - 1}")
        if mask:
            masks.append(mask)
    return HereditaryHypergraph(space, maximal_antichain(masks))


def dual(n: int, hyperedges: Iterable[int | Iterable[int]]) -> list[int]:
    """Complement every hyperedge of an explicit hypergraph within {0..n-1}.

    Applying the operation twice returns the original list (same order).
    """
    space = full_set(n)
    out = []
    for e in hyperedges:
        mask = e if isinstance(e, int) else vset(e)
        if mask & ~space:
            raise BadIndex(f"hyperedge {members(mask)} not within 0..{n - 1}")
        out.append(space & ~mask)
    return out


@dataclass(frozen=True)
class IndependenceOracle:
    """A monotone-decreasing predicate on vertex subsets of {0..n-1}.

    The predicate answers whether a subset is a hyperedge of the family it
    represents (with the convention that the empty set is accepted).
    Monotonicity cannot be proven at runtime; generator extraction
    spot-checks it probabilistically.
    """

    n: int
    predicate: Callable[[int], bool]

    def __call__(self, x: int) -> bool:
        return self.predicate(x)


def stable_sets(n: int, hyperedges: Iterable[int | Iterable[int]]) -> IndependenceOracle:
    """Oracle for the stable sets of an explicit (not necessarily hereditary)
    hypergraph: subsets containing no hyperedge.

    A set S is stable exactly when its complement meets every hyperedge,
    i.e. when V minus S is a transversal.
    """
    space = full_set(n)
    masks = []
    for e in hyperedges:
        mask = e if isinstance(e, int) else vset(e)
        if mask & ~space:
            raise BadIndex(f"hyperedge {members(mask)} not within 0..{n - 1}")
        masks.append(mask)
    edge_list = tuple(masks)

    def predicate(s: int) -> bool:
        return not any(e & s == e for e in edge_list)

    return IndependenceOracle(n, predicate)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise VertexLimitExceeded(f"vertex count {self.n} not in 0..{MAX_VERTICES}")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadIndex(f"edge ({u}, {v}) not within 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalized")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset((min(u, v), max(u, v)) for u, v in pairs))

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists; the fixed scan order of every algorithm."""
        return tuple(tuple(members(m)) for m in self.adjacency_masks)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def without_vertex(self, v: int) -> "Graph":
        """Drop every edge incident to v (labels are preserved)."""
        if not 0 <= v < self.n:
            raise BadIndex(f"vertex {v} not within 0..{self.n - 1}")
        return Graph(self.n, frozenset(e for e in self.edges if v not in e))

    def complement(self) -> "Graph":
        pairs = frozenset(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        )
        return Graph(self.n, pairs)

    def components(self) -> tuple[int, ...]:
        """Connected components as bitmasks, ordered by lowest vertex."""
        adj = self.adjacency_masks
        remaining = full_set(self.n)
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                grown = 0
                for v in iter_bits(frontier):
                    grown |= adj[v]
                frontier = grown & ~comp
            comps.append(comp)
            remaining &= ~comp
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def friendship_graph(t: int) -> Graph:
    """t triangles sharing the single vertex 0 (n = 2t + 1)."""
    if t < 1:
        raise ValueError("friendship graphs need at least 1 triangle")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * t + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)
