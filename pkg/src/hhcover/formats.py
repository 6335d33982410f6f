"""File formats: JSON hypergraphs, edge-list graphs, and certificates.

Hypergraph JSON::

    {"n": 5, "generators": [[0, 2], [1, 3], ...]}

with 0-based vertex indices; the reader normalizes to an antichain and
validates that every vertex is covered.  Graphs and digraphs use a plain
text format: a header line ``n <count>`` followed by one ``u v`` pair per
line (ordered for digraphs); weighted graphs use ``u v w`` lines.  Blank
lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Graph, HereditaryHypergraph, from_hyperedges, members
from .cover import Cover
from .families import Digraph, WeightedGraph
from .matching import FactorCriticalCertificate


def hypergraph_to_dict(h: HereditaryHypergraph) -> dict:
    if h.vertices != (1 << h.space) - 1:
        raise ValueError("only hypergraphs on contiguous labels 0..n-1 serialize")
    return {"n": h.space, "generators": [members(g) for g in h.generators]}


def load_hypergraph(path: str | Path) -> HereditaryHypergraph:
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict) or "n" not in data or "generators" not in data:
        raise ValueError(f"{path}: expected an object with 'n' and 'generators'")
    n = data["n"]
    generators = data["generators"]
    if not isinstance(n, int) or not isinstance(generators, list):
        raise ValueError(f"{path}: 'n' must be an int and 'generators' a list")
    for g in generators:
        if not isinstance(g, list) or not all(isinstance(v, int) for v in g):
            raise ValueError(f"{path}: generators must be lists of ints")
    return from_hyperedges(n, generators)


def save_hypergraph(h: HereditaryHypergraph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(hypergraph_to_dict(h), handle, sort_keys=True)
        handle.write("\n")


def _read_rows(path: str | Path, columns: int) -> tuple[int, list[list[str]]]:
    rows: list[list[str]] = []
    n = None
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if n is None:
                if len(fields) != 2 or fields[0] != "n":
                    raise ValueError(f"{path}: first line must be 'n <count>'")
                n = int(fields[1])
                continue
            if len(fields) != columns:
                raise ValueError(f"{path}: expected {columns} fields, got {line!r}")
            rows.append(fields)
    if n is None:
        raise ValueError(f"{path}: missing 'n <count>' header")
    return n, rows


def load_graph(path: str | Path) -> Graph:
    n, rows = _read_rows(path, 2)
    return Graph.from_edges(n, [(int(u), int(v)) for u, v in rows])


def load_digraph(path: str | Path) -> Digraph:
    n, rows = _read_rows(path, 2)
    return Digraph.from_arcs(n, [(int(u), int(v)) for u, v in rows])


def load_weighted_graph(path: str | Path) -> WeightedGraph:
    n, rows = _read_rows(path, 3)
    return WeightedGraph(n, tuple((int(u), int(v), float(w)) for u, v, w in rows))


def cover_to_lists(cover: Cover) -> list[list[int]]:
    return cover.as_lists()


def certificate_to_dict(certificate: FactorCriticalCertificate) -> dict:
    """JSON-ready map vertex -> list of matching edges covering the rest."""
    return {
        str(v): [list(edge) for edge in matching.edges]
        for v, matching in sorted(certificate.matchings.items())
    }
