"""Hereditary families built from graphs, digraphs and weighted graphs.

Each constructor returns an :class:`~hhcover.core.IndependenceOracle`, a
monotone membership predicate; ``maximal_generators`` turns an oracle into
the antichain representation the solvers consume by enumerating all
inclusion-maximal feasible sets.  Feasibility of every singleton is what
keeps the resulting hypergraph a cover of its vertex set, so constructors
reject inputs that would break it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Callable, Iterable

from .core import (
    MAX_VERTICES,
    BadIndex,
    Graph,
    HereditaryHypergraph,
    IndependenceOracle,
    VertexLimitExceeded,
    from_hyperedges,
    full_set,
    iter_bits,
    members,
)


class SingletonExcluded(ValueError):
    """A forbidden pattern on one (or zero) vertices would exclude singletons."""


class BadK(ValueError):
    """Size caps below 2 degenerate the family to singletons."""


class NegativeWeight(ValueError):
    """Negative edge weights would break monotonicity of the threshold family."""


class LambdaTooSmall(ValueError):
    """The threshold rejects some singleton, so the family cannot cover."""


class MonotonicityViolation(ValueError):
    """A sampled pair X, Y with Y inside X where the oracle accepts X but not Y."""

    def __init__(self, superset: int, subset: int) -> None:
        super().__init__(
            f"oracle accepts {members(superset)} but rejects its subset {members(subset)}"
        )
        self.superset = superset
        self.subset = subset


class GeneratorBudgetExceeded(RuntimeError):
    """More maximal sets than the configured cap."""


@dataclass(frozen=True)
class Digraph:
    """Simple digraph: no loops, at most one arc per ordered pair;
    two-cycles (arcs both ways) are allowed."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise VertexLimitExceeded(f"vertex count {self.n} not in 0..{MAX_VERTICES}")
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadIndex(f"arc ({u}, {v}) not within 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")

    @classmethod
    def from_arcs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset(tuple(p) for p in pairs))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph with a nonnegative weight per edge."""

    n: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise VertexLimitExceeded(f"vertex count {self.n} not in 0..{MAX_VERTICES}")
        seen = set()
        normalized = []
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadIndex(f"edge ({u}, {v}) not within 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if w < 0:
                raise NegativeWeight(f"edge ({u}, {v}) has weight {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            normalized.append((*key, w))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))


def _has_induced_copy(host, pattern, subset: int) -> bool:
    """Brute force over injections of the pattern into the induced sub(di)graph."""
    vertices = members(subset)
    k = pattern.n
    if k > len(vertices):
        return False
    directed = isinstance(host, Digraph)
    for image in permutations(vertices, k):
        if directed:
            wrong = any(
                pattern.has_arc(i, j) != host.has_arc(image[i], image[j])
                for i in range(k)
                for j in range(k)
                if i != j
            )
        else:
            wrong = any(
                pattern.has_edge(i, j) != host.has_edge(image[i], image[j])
                for i in range(k)
                for j in range(i + 1, k)
            )
        if not wrong:
            return True
    return False


def forbidden_subgraph_family(
    host: Graph | Digraph, forbidden: list[Graph] | list[Digraph]
) -> IndependenceOracle:
    """Subsets whose induced sub(di)graph avoids every forbidden pattern.

    Induced-subgraph-freeness is hereditary, so the oracle is monotone by
    construction.  Patterns are capped at 5 vertices (the matcher is a
    plain search over injections) and one-vertex patterns are rejected:
    they would exclude singletons.
    """
    for pattern in forbidden:
        if isinstance(pattern, Digraph) != isinstance(host, Digraph):
            raise TypeError("forbidden patterns must match the host's kind")
        if pattern.n <= 1:
            raise SingletonExcluded(
                f"pattern on {pattern.n} vertex(es) would exclude singletons"
            )
        if pattern.n > 5:
            raise ValueError(f"patterns are capped at 5 vertices, got {pattern.n}")
    patterns = tuple(forbidden)

    def predicate(subset: int) -> bool:
        return not any(_has_induced_copy(host, p, subset) for p in patterns)

    return IndependenceOracle(host.n, predicate)


def stable_set_family(graph: Graph) -> IndependenceOracle:
    """Subsets spanning no edge; covering them is proper coloring."""
    adjacency = graph.adjacency_masks

    def predicate(subset: int) -> bool:
        return not any(adjacency[v] & subset for v in iter_bits(subset))

    return IndependenceOracle(graph.n, predicate)


def clique_family(graph: Graph) -> IndependenceOracle:
    """Subsets inducing complete graphs; covering them is clique cover."""
    adjacency = graph.adjacency_masks

    def predicate(subset: int) -> bool:
        return all(
            subset & ~(1 << v) & ~adjacency[v] == 0 for v in iter_bits(subset)
        )

    return IndependenceOracle(graph.n, predicate)


def bounded_class_family(base: IndependenceOracle, k: int) -> IndependenceOracle:
    """Members of the base family with at most k vertices (k >= 2)."""
    if k < 2:
        raise BadK(f"size cap must be at least 2, got {k}")

    def predicate(subset: int) -> bool:
        return subset.bit_count() <= k and base(subset)

    return IndependenceOracle(base.n, predicate)


def acyclic_family(digraph: Digraph) -> IndependenceOracle:
    """Subsets inducing no directed cycle (two-cycles included); covering
    them realizes the dichromatic number."""
    out = digraph.out_masks
    cache: dict[int, bool] = {}

    def acyclic(subset: int) -> bool:
        cached = cache.get(subset)
        if cached is not None:
            return cached
        # Kahn peeling restricted to the subset
        remaining = subset
        while remaining:
            progressed = False
            for v in iter_bits(remaining):
                if not out[v] & remaining:
                    remaining &= ~(1 << v)
                    progressed = True
            if not progressed:
                cache[subset] = False
                return False
        cache[subset] = True
        return True

    return IndependenceOracle(digraph.n, acyclic)


def threshold_family(
    weighted: WeightedGraph,
    lam: float,
    aggregate: Callable[[list[float]], float] | None = None,
) -> IndependenceOracle:
    """Subsets whose induced edge weights aggregate to at most ``lam``.

    The default aggregate is the plain sum.  A custom aggregate must be
    monotone under adding induced edges, otherwise the family stops being
    hereditary; this is the caller's contract.
    """
    combine = aggregate if aggregate is not None else lambda ws: sum(ws)

    def predicate(subset: int) -> bool:
        induced = [
            w for u, v, w in weighted.edges if subset >> u & 1 and subset >> v & 1
        ]
        return combine(induced) <= lam

    for v in range(weighted.n):
        if not predicate(1 << v):
            raise LambdaTooSmall(f"threshold {lam} rejects the singleton {{{v}}}")
    return IndependenceOracle(weighted.n, predicate)


def spot_check_monotone(
    oracle: IndependenceOracle, samples: int = 1000, seed: int = 0
) -> None:
    """Probabilistic monotonicity check: random pairs Y inside X.

    Raises :class:`MonotonicityViolation` with the failing pair.  This is
    the best a runtime can do against an opaque predicate.
    """
    rng = random.Random(seed)
    space = full_set(oracle.n)
    if space == 0:
        return
    for _ in range(samples):
        x = rng.getrandbits(oracle.n) & space
        y = x & rng.getrandbits(oracle.n)
        if oracle(x) and not oracle(y):
            raise MonotonicityViolation(x, y)


def maximal_generators(
    oracle: IndependenceOracle,
    max_generators: int = 10**6,
    monotonicity_samples: int = 1000,
) -> HereditaryHypergraph:
    """All inclusion-maximal feasible sets of a monotone oracle.

    Feasible sets are grown one vertex at a time in increasing index
    order, so every feasible set is visited exactly once and a set is
    emitted exactly when no single vertex extends it.  Raises
    :class:`GeneratorBudgetExceeded` past ``max_generators`` and
    :class:`~hhcover.core.UncoveredVertex` if some singleton is infeasible.
    """
    n = oracle.n
    if n > MAX_VERTICES:
        raise VertexLimitExceeded(f"vertex count {n} not in 0..{MAX_VERTICES}")
    if monotonicity_samples:
        spot_check_monotone(oracle, monotonicity_samples)
    found: list[int] = []

    def grow(current: int, start: int) -> None:
        extendable = False
        for v in range(n):
            bit = 1 << v
            if current & bit:
                continue
            if oracle(current | bit):
                extendable = True
                if v >= start:
                    grow(current | bit, v + 1)
        if not extendable and current:
            if len(found) >= max_generators:
                raise GeneratorBudgetExceeded(
                    f"more than {max_generators} maximal sets"
                )
            found.append(current)

    grow(0, 0)
    return from_hyperedges(n, found)
