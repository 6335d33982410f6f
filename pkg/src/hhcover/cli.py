"""Command-line interface.

Exit codes: 0 on success, 1 when a verification run finds violations,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import BadIndex, UncoveredVertex, VertexLimitExceeded, members
from .cover import (
    enumerate_min_covers,
    min_cover,
    mu,
    rho_after_each_deletion,
)
from .criticality import (
    ConditionNotMet,
    NotEqualityCase,
    TheoremCase,
    classify_critical,
    critical_core,
    is_critical,
    structured_cover,
)
from .families import (
    BadK,
    GeneratorBudgetExceeded,
    LambdaTooSmall,
    MonotonicityViolation,
    NegativeWeight,
    SingletonExcluded,
    acyclic_family,
    bounded_class_family,
    clique_family,
    maximal_generators,
    stable_set_family,
    threshold_family,
)
from .formats import (
    certificate_to_dict,
    hypergraph_to_dict,
    load_digraph,
    load_graph,
    load_hypergraph,
    load_weighted_graph,
    save_hypergraph,
)
from .harness import GeneratorConfig, TooLarge, verify_universe
from .matching import verify_gallai_lemma

_INPUT_ERRORS = (
    OSError,
    ValueError,
    json.JSONDecodeError,
    BadIndex,
    UncoveredVertex,
    VertexLimitExceeded,
    TooLarge,
    BadK,
    NegativeWeight,
    LambdaTooSmall,
    SingletonExcluded,
    MonotonicityViolation,
    GeneratorBudgetExceeded,
    ConditionNotMet,
    NotEqualityCase,
)


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _cmd_rho(args) -> int:
    h = load_hypergraph(args.file)
    value, witness = min_cover(h)
    _emit({"rho": value, "witness": witness.as_lists()}, args.json)
    return 0


def _cmd_enumerate(args) -> int:
    h = load_hypergraph(args.file)
    covers, truncated = enumerate_min_covers(h, limit=args.limit)
    payload = {
        "rho": len(covers[0]) if covers else 0,
        "covers": [c.as_lists() for c in covers],
        "truncated": truncated,
    }
    _emit(payload, args.json)
    return 0


def _cmd_mu(args) -> int:
    h = load_hypergraph(args.file)
    value, witness = mu(h, over_min_covers=args.min_covers)
    _emit(
        {"mu": value, "over_min_covers": args.min_covers, "witness": witness.as_lists()},
        args.json,
    )
    return 0


def _cmd_critical(args) -> int:
    h = load_hypergraph(args.file)
    if args.action == "check":
        report = is_critical(h)
        _emit(
            {
                "rho": report.rho,
                "is_critical": report.is_critical,
                "failing_vertices": list(report.failing_vertices),
                "rho_after_deletion": {
                    str(v): r for v, r in sorted(report.rho_after_deletion.items())
                },
            },
            args.json,
        )
    else:  # core
        core = critical_core(h)
        _emit(
            {
                "vertices": members(core.vertices),
                "generators": [members(g) for g in core.generators],
                "rho": min_cover(core)[0],
                "deleted": members(h.vertices & ~core.vertices),
            },
            args.json,
        )
    return 0


def _cmd_theorem(args) -> int:
    h = load_hypergraph(args.file)
    if args.action == "classify":
        cls = classify_critical(h)
        payload = {"case": cls.case.value, "n": cls.n, "rho": cls.rho}
        if cls.reason:
            payload["reason"] = cls.reason
        if cls.cover is not None:
            payload["witness"] = cls.cover.as_lists()
        if cls.certificate is not None:
            payload["certificate"] = certificate_to_dict(cls.certificate)
        if cls.violation is not None:
            payload["violation"] = cls.violation
        _emit(payload, args.json)
        return 1 if cls.case is TheoremCase.VIOLATION else 0
    cover = structured_cover(h, args.vertex)
    _emit({"vertex": args.vertex, "cover": cover.as_lists()}, args.json)
    return 0


def _cmd_family(args) -> int:
    if args.kind == "acyclic":
        oracle = acyclic_family(load_digraph(args.input))
    elif args.kind == "threshold":
        if args.lam is None:
            raise ValueError("threshold families need --lambda")
        oracle = threshold_family(load_weighted_graph(args.input), args.lam)
    else:
        graph = load_graph(args.input)
        if args.kind == "stable":
            oracle = stable_set_family(graph)
        elif args.kind == "clique":
            oracle = clique_family(graph)
        else:  # bounded
            if args.k is None:
                raise ValueError("bounded families need --k")
            oracle = bounded_class_family(stable_set_family(graph), args.k)
    h = maximal_generators(oracle, max_generators=args.max_generators)
    save_hypergraph(h, args.out)
    _emit(
        {"out": str(args.out), "n": h.space, "generator_count": len(h.generators)},
        args.json,
    )
    return 0


def _cmd_verify(args) -> int:
    if args.random:
        cfg = GeneratorConfig(
            n=args.n,
            mode="random",
            seed=args.seed,
            sample_count=args.count,
            max_generator_count=args.max_generators,
        )
    else:
        cfg = GeneratorConfig(n=args.n, mode="exhaustive")
    report = verify_universe(cfg)
    payload = report.to_json_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, sort_keys=True, indent=2)
            handle.write("\n")
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        counts = payload["counts"]
        for key, value in counts.items():
            print(f"{key}: {value}")
        print(f"violations: {len(report.violations)}")
        print(f"runtime_seconds: {report.runtime_seconds:.3f}")
    return 1 if report.violations else 0


def _cmd_lemma(args) -> int:
    graph = load_graph(args.file)
    report = verify_gallai_lemma(graph)
    payload: dict = {"nu": report.nu, "applies": report.applies}
    if report.applies:
        payload["conclusion_holds"] = report.conclusion_holds
        payload["witnesses"] = {
            str(v): [list(e) for e in m.edges]
            for v, m in sorted(report.witnesses.items())
        }
    else:
        payload["failed_hypothesis"] = report.failed_hypothesis
        if report.failing_vertex is not None:
            payload["failing_vertex"] = report.failing_vertex
    _emit(payload, args.json)
    return 1 if report.applies and not report.conclusion_holds else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhcover",
        description="Minimum covers and critical structure of hereditary hypergraphs.",
    )
    parser.add_argument("--version", action="version", version=f"hhcover {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = with_json(sub.add_parser("rho", help="minimum cover size and a witness"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_rho)

    p = with_json(sub.add_parser("enumerate", help="all minimum covers"))
    p.add_argument("--limit", type=int, default=10**6)
    p.add_argument("file")
    p.set_defaults(func=_cmd_enumerate)

    p = with_json(sub.add_parser("mu", help="most vertices covered by non-singletons"))
    p.add_argument("--min-covers", dest="min_covers", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=_cmd_mu)

    p = with_json(sub.add_parser("critical", help="criticality check / critical core"))
    p.add_argument("action", choices=["check", "core"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_critical)

    p = with_json(sub.add_parser("theorem", help="classify or build structured covers"))
    p.add_argument("action", choices=["classify", "structured-cover"])
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("file")
    p.set_defaults(func=_cmd_theorem)

    p = with_json(sub.add_parser("family", help="build a hypergraph from a (di)graph"))
    p.add_argument("kind", choices=["stable", "clique", "acyclic", "bounded", "threshold"])
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--k", type=int, default=None, help="size cap for 'bounded'")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="weight threshold for 'threshold'")
    p.add_argument("--max-generators", type=int, default=10**6)
    p.set_defaults(func=_cmd_family)

    p = with_json(sub.add_parser("verify", help="batch-verify the cover laws"))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--random", action="store_true")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-generators", type=int, default=8)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.set_defaults(func=_cmd_verify)

    p = with_json(sub.add_parser("lemma", help="matching lemma check on a graph file"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_lemma)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"hhcover: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
