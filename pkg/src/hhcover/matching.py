"""Maximum matching, factor-criticality and Gallai's lemma on graphs.

The matching routine is the classical Edmonds blossom algorithm in its
array form: grow an alternating BFS tree from each exposed vertex,
contract odd cycles by redirecting them to a common base, and augment
along the parent pointers when an exposed vertex is reached.  Vertices
and neighbors are always scanned in increasing order, so repeated runs
return the identical matching.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, full_set, members


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of some host graph."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= (1 << u) | (1 << v)
        return mask

    def is_valid_for(self, graph: Graph) -> bool:
        seen = 0
        for u, v in self.edges:
            if not graph.has_edge(u, v):
                return False
            pair = (1 << u) | (1 << v)
            if seen & pair:
                return False
            seen |= pair
        return True


@dataclass(frozen=True)
class FactorCriticalCertificate:
    """For each vertex v, a matching covering exactly the other vertices."""

    matchings: dict[int, Matching]

    def is_valid_for(self, graph: Graph) -> bool:
        want = full_set(graph.n)
        for v, matching in self.matchings.items():
            if not matching.is_valid_for(graph):
                return False
            if matching.covered != want & ~(1 << v):
                return False
        return set(self.matchings) == set(range(graph.n))


def _find_augmenting(neighbors, match, root, n):
    """One blossom BFS phase; returns the exposed endpoint and parents."""
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        x = b
        while True:
            x = base[x]
            if seen[x]:
                return x
            x = parent[match[x]]

    def mark_path(v, b, child, in_blossom):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in neighbors[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom onto its base
                cur_base = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def max_matching(graph: Graph) -> Matching:
    """Maximum-cardinality matching of a simple graph."""
    n = graph.n
    neighbors = graph.neighbors
    match = [-1] * n
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _find_augmenting(neighbors, match, root, n)
        while end != -1:
            prev = parent[end]
            follow = match[prev]
            match[end] = prev
            match[prev] = end
            end = follow
    edges = tuple((v, match[v]) for v in range(n) if match[v] > v)
    return Matching(edges)


def nu(graph: Graph) -> int:
    """Maximum matching size."""
    return max_matching(graph).size


def is_factor_critical(graph: Graph) -> tuple[bool, FactorCriticalCertificate | None]:
    """Decide whether deleting any one vertex leaves a perfect matching.

    Requires connectivity and an odd vertex count; a single vertex counts
    as factor-critical with the empty matching.  On success the per-vertex
    near-perfect matchings are returned as a certificate.
    """
    n = graph.n
    if n == 0 or n % 2 == 0 or not graph.is_connected():
        return False, None
    target = (n - 1) // 2
    matchings: dict[int, Matching] = {}
    for v in range(n):
        m = max_matching(graph.without_vertex(v))
        if m.size != target:
            return False, None
        matchings[v] = m
    return True, FactorCriticalCertificate(matchings)


@dataclass(frozen=True)
class GallaiLemmaReport:
    """Outcome of checking the factor-critical matching lemma on a graph.

    The lemma: a connected graph in which every single-vertex deletion
    preserves the maximum matching size has matching number (n - 1) / 2.
    ``applies`` records whether the hypotheses hold; when they do,
    ``conclusion_holds`` must be True and ``witnesses`` carries a maximum
    matching of G - v for every v.
    """

    nu: int
    applies: bool
    failed_hypothesis: str | None
    failing_vertex: int | None
    conclusion_holds: bool | None
    witnesses: dict[int, Matching] | None


def verify_gallai_lemma(graph: Graph) -> GallaiLemmaReport:
    """Check the lemma's hypotheses on a graph and, when they hold, its
    conclusion; otherwise report which hypothesis fails and where."""
    value = nu(graph)
    if not graph.is_connected():
        return GallaiLemmaReport(value, False, "connected", None, None, None)
    witnesses: dict[int, Matching] = {}
    for v in range(graph.n):
        m = max_matching(graph.without_vertex(v))
        if m.size != value:
            return GallaiLemmaReport(
                value, False, "deletion-preserves-matching-size", v, None, None
            )
        witnesses[v] = m
    holds = 2 * value == graph.n - 1
    return GallaiLemmaReport(value, True, None, None, holds, witnesses)
