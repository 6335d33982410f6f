"""Criticality, critical cores, and the structure of minimum covers.

A hereditary hypergraph is critical when deleting any single vertex lowers
the cover number by exactly one.  For connected critical hypergraphs the
cover number is at most (n + 1) / 2, and the boundary is rigid: either the
bound is strict and some minimum cover avoids singletons altogether, or it
is attained, the two-element-edge graph is factor-critical, and for every
vertex v the singleton {v} plus a perfect matching of that graph minus v
is a minimum cover.  ``classify_critical`` decides which side holds and
returns the corresponding witness; a violation of the bound itself is
reported as data (never swallowed) since it would mean either a solver bug
or a genuine counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import HereditaryHypergraph, members, vset
from .core import BadIndex
from .cover import Cover, has_singleton_free_min_cover, min_cover, rho_after_each_deletion
from .matching import FactorCriticalCertificate, Matching, is_factor_critical


class NotEqualityCase(ValueError):
    """Structured covers only exist when the (n + 1) / 2 bound is attained."""


class ConditionNotMet(ValueError):
    """The size condition n <= 2 * (rho - 1) does not hold."""


@dataclass(frozen=True)
class CriticalityReport:
    rho: int
    is_critical: bool
    failing_vertices: tuple[int, ...]
    rho_after_deletion: dict[int, int] = field(compare=False)


class TheoremCase(Enum):
    NOT_APPLICABLE = "not_applicable"
    STRICT = "strict"
    EQUALITY = "equality"
    VIOLATION = "violation"


@dataclass(frozen=True)
class TheoremClassification:
    """Classification of a hypergraph against the (n + 1) / 2 cover bound.

    STRICT carries a singleton-free minimum cover, EQUALITY the
    factor-critical certificate of the edge graph.  VIOLATION carries a
    full instance dump for replay.
    """

    case: TheoremCase
    n: int
    rho: int
    reason: str | None = None
    cover: Cover | None = None
    certificate: FactorCriticalCertificate | None = None
    violation: dict | None = None


def is_critical(h: HereditaryHypergraph) -> CriticalityReport:
    """Exact per-vertex check: which deletions fail to lower the cover number."""
    if h.vertices == 0:
        raise ValueError("criticality needs at least one vertex")
    base, _ = min_cover(h)
    after = rho_after_each_deletion(h)
    failing = tuple(v for v, value in after.items() if value == base)
    return CriticalityReport(base, not failing, failing, after)


def critical_core(h: HereditaryHypergraph) -> HereditaryHypergraph:
    """Delete vertices whose removal keeps the cover number until none is left.

    Always removes the smallest eligible vertex, so the result is
    deterministic; its cover number equals the input's and it is critical.
    """
    current = h
    while current.vertices:
        base, _ = min_cover(current)
        for v in members(current.vertices):
            if min_cover(current.delete_vertex(v))[0] == base:
                current = current.delete_vertex(v)
                break
        else:
            return current
    return current


def _instance_dump(h: HereditaryHypergraph) -> dict:
    return {
        "vertices": members(h.vertices),
        "generators": [members(g) for g in h.generators],
    }


def _edge_graph_certificate(h: HereditaryHypergraph):
    """Factor-criticality of the edge graph, reported in h's labels."""
    compacted, labels = h.compact()
    ok, certificate = is_factor_critical(compacted.edge_graph())
    if not ok:
        return False, None
    relabeled = {
        labels[v]: Matching(tuple((labels[a], labels[b]) for a, b in m.edges))
        for v, m in certificate.matchings.items()
    }
    return True, FactorCriticalCertificate(relabeled)


def classify_critical(h: HereditaryHypergraph) -> TheoremClassification:
    """Decide strict bound versus attained bound for a connected critical
    hypergraph; anything else is NOT_APPLICABLE with the reason."""
    n = h.n
    if n == 0:
        return TheoremClassification(TheoremCase.NOT_APPLICABLE, 0, 0, reason="empty")
    if not h.is_connected():
        return TheoremClassification(
            TheoremCase.NOT_APPLICABLE, n, min_cover(h)[0], reason="not connected"
        )
    report = is_critical(h)
    if not report.is_critical:
        return TheoremClassification(
            TheoremCase.NOT_APPLICABLE, n, report.rho, reason="not critical"
        )
    rho_value = report.rho
    if 2 * rho_value > n + 1:
        return TheoremClassification(
            TheoremCase.VIOLATION,
            n,
            rho_value,
            reason="cover number exceeds (n + 1) / 2",
            violation={
                "instance": _instance_dump(h),
                "stage": "bound",
                "expected": f"rho <= {(n + 1) / 2}",
                "got": rho_value,
            },
        )
    if 2 * rho_value == n + 1:
        ok, certificate = _edge_graph_certificate(h)
        if not ok:
            return TheoremClassification(
                TheoremCase.VIOLATION,
                n,
                rho_value,
                reason="bound attained but edge graph not factor-critical",
                violation={
                    "instance": _instance_dump(h),
                    "stage": "equality-certificate",
                    "expected": "factor-critical edge graph",
                    "got": "no certificate",
                },
            )
        return TheoremClassification(
            TheoremCase.EQUALITY, n, rho_value, certificate=certificate
        )
    ok, cover = has_singleton_free_min_cover(h)
    if not ok:
        return TheoremClassification(
            TheoremCase.VIOLATION,
            n,
            rho_value,
            reason="strict bound but every minimum cover uses a singleton",
            violation={
                "instance": _instance_dump(h),
                "stage": "strict-witness",
                "expected": "a singleton-free minimum cover",
                "got": "none",
            },
        )
    return TheoremClassification(TheoremCase.STRICT, n, rho_value, cover=cover)


def structured_cover(
    h: HereditaryHypergraph,
    v: int,
    classification: TheoremClassification | None = None,
) -> Cover:
    """The minimum cover made of the singleton {v} plus a perfect matching
    of the edge graph minus v; only defined when the bound is attained."""
    if classification is None:
        classification = classify_critical(h)
    if classification.case is not TheoremCase.EQUALITY:
        raise NotEqualityCase(
            f"classification is {classification.case.value}, not equality"
        )
    if not h.vertices >> v & 1:
        raise BadIndex(f"vertex {v} not in vertex set {members(h.vertices)}")
    matching = classification.certificate.matchings[v]
    parts = [1 << v] + [vset(edge) for edge in matching.edges]
    return Cover(tuple(parts))


@dataclass(frozen=True)
class CorollaryGallaiReport:
    """n <= 2 * (rho - 1) forces 'not critical' or 'not connected'."""

    n: int
    rho: int
    condition_met: bool
    not_critical_holds: bool | None
    not_connected_holds: bool | None
    violated: bool


def check_corollary_gallai(h: HereditaryHypergraph) -> CorollaryGallaiReport:
    rho_value, _ = min_cover(h)
    n = h.n
    if n > 2 * (rho_value - 1):
        return CorollaryGallaiReport(n, rho_value, False, None, None, False)
    not_critical = not is_critical(h).is_critical
    not_connected = not h.is_connected()
    return CorollaryGallaiReport(
        n,
        rho_value,
        True,
        not_critical,
        not_connected,
        violated=not (not_critical or not_connected),
    )


@dataclass(frozen=True)
class CorollaryConcreteReport:
    """Under the same size condition: a vertex whose deletion lowers the
    cover number, or a bipartition crossed by no two-element hyperedge.
    Both witnesses are reported whenever both exist."""

    n: int
    rho: int
    dropping_vertex: int | None
    bipartition: tuple[int, int] | None
    violated: bool


def check_corollary_concrete(h: HereditaryHypergraph) -> CorollaryConcreteReport:
    rho_value, _ = min_cover(h)
    n = h.n
    if n > 2 * (rho_value - 1):
        raise ConditionNotMet(f"n = {n} exceeds 2 * (rho - 1) = {2 * (rho_value - 1)}")
    dropping = None
    for v, value in rho_after_each_deletion(h).items():
        if value == rho_value - 1:
            dropping = v
            break
    bipartition = None
    comps = h.components()
    if len(comps) > 1:
        bipartition = (comps[0], h.vertices & ~comps[0])
    return CorollaryConcreteReport(
        n,
        rho_value,
        dropping,
        bipartition,
        violated=dropping is None and bipartition is None,
    )
