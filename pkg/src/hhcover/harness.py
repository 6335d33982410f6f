"""Instance generation and batch verification of the cover-structure laws.

The exhaustive stream walks every covering antichain of nonempty subsets
on up to five vertices; beyond that a seeded random stream stands in.
``verify_universe`` pushes every instance through the solvers, validates
all returned witnesses, and collects violations as data: the harness never
assumes the laws it is checking, so a violation report distinguishes
nothing by itself between a solver bug and a genuine counterexample - the
dump carries everything needed to replay.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .core import HereditaryHypergraph, from_hyperedges, full_set, members, vset
from .cover import is_valid_cover, min_cover, rho_after_each_deletion
from .criticality import (
    TheoremCase,
    check_corollary_concrete,
    check_corollary_gallai,
    classify_critical,
    structured_cover,
)

WORKERS_ENV = "HHCOVER_WORKERS"


class TooLarge(ValueError):
    """Exhaustive enumeration is capped at five vertices."""


@dataclass(frozen=True)
class GeneratorConfig:
    """How to produce the instance stream.

    ``exhaustive`` walks all covering antichains on n <= 5 vertices;
    ``random`` draws ``sample_count`` seeded instances: up to
    ``max_generator_count`` subsets with geometrically decaying sizes,
    topped up with the missing singletons and normalized to an antichain.
    """

    n: int
    mode: str = "exhaustive"
    seed: int = 0
    sample_count: int = 100
    max_generator_count: int = 8

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and self.n > 5:
            raise TooLarge(f"exhaustive enumeration is capped at n = 5, got {self.n}")
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.mode == "random" and self.sample_count < 0:
            raise ValueError("sample_count must be nonnegative")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "sample_count": self.sample_count,
            "max_generator_count": self.max_generator_count,
        }


def enumerate_hereditary(n: int) -> Iterator[HereditaryHypergraph]:
    """Every antichain of nonempty subsets of {0..n-1} whose union is the
    whole vertex set, each exactly once, in a fixed deterministic order."""
    if n > 5:
        raise TooLarge(f"exhaustive enumeration is capped at n = 5, got {n}")
    if n < 1:
        raise ValueError("need at least one vertex")
    space = full_set(n)
    all_masks = list(range(1, space + 1))
    chosen: list[int] = []

    def walk(start: int, union: int) -> Iterator[HereditaryHypergraph]:
        if union == space:
            yield HereditaryHypergraph(space, tuple(chosen))
        for i in range(start, len(all_masks)):
            m = all_masks[i]
            if any(m & c == m or m & c == c for c in chosen):
                continue
            chosen.append(m)
            yield from walk(i + 1, union | m)
            chosen.pop()

    yield from walk(0, 0)


def random_hereditary(cfg: GeneratorConfig) -> Iterator[HereditaryHypergraph]:
    """Seeded, reproducible stream of valid instances."""
    if cfg.mode != "random":
        raise ValueError("config mode must be 'random'")
    rng = random.Random(cfg.seed)
    n = cfg.n
    for _ in range(cfg.sample_count):
        count = rng.randint(1, cfg.max_generator_count)
        subsets = []
        for _ in range(count):
            size = 1
            while size < n and rng.random() < 0.5:
                size += 1
            subsets.append(vset(rng.sample(range(n), size)))
        covered = 0
        for s in subsets:
            covered |= s
        for v in range(n):
            if not covered >> v & 1:
                subsets.append(1 << v)
        yield from_hyperedges(n, subsets)


@dataclass
class VerificationReport:
    config: GeneratorConfig
    instances_checked: int = 0
    connected_critical_found: int = 0
    strict_count: int = 0
    equality_count: int = 0
    violations: list[dict] = field(default_factory=list)
    runtime_seconds: float = 0.0

    def to_json_dict(self, include_runtime: bool = True) -> dict:
        out = {
            "config": self.config.to_json_dict(),
            "counts": {
                "instances_checked": self.instances_checked,
                "connected_critical_found": self.connected_critical_found,
                "strict_count": self.strict_count,
                "equality_count": self.equality_count,
            },
            "violations": self.violations,
        }
        if include_runtime:
            out["runtime_seconds"] = self.runtime_seconds
        return out

    def canonical_json(self) -> str:
        """Byte-stable serialization: runtime is excluded on purpose."""
        return json.dumps(self.to_json_dict(include_runtime=False), sort_keys=True)


def _dump(h: HereditaryHypergraph) -> dict:
    return {
        "vertices": members(h.vertices),
        "generators": [members(g) for g in h.generators],
    }


def _violation(h, stage, expected, got) -> dict:
    return {"instance": _dump(h), "stage": stage, "expected": expected, "got": got}


def _check_instance(payload: tuple[int, tuple[int, ...]]) -> tuple[str, list[dict]]:
    """Verify one instance; returns its classification tag and violations."""
    vertices, generators = payload
    h = HereditaryHypergraph(vertices, generators)
    violations: list[dict] = []

    rho_value, witness = min_cover(h)
    if not is_valid_cover(h, witness) or len(witness) != rho_value:
        violations.append(
            _violation(h, "cover-validity", "valid minimum partition", witness.as_lists())
        )

    after = rho_after_each_deletion(h)
    connected = h.is_connected()
    critical = all(value == rho_value - 1 for value in after.values())

    tag = "other"
    if connected and critical:
        cls = classify_critical(h)
        if cls.case is TheoremCase.VIOLATION:
            tag = "violation"
            violations.append(cls.violation)
        elif cls.case is TheoremCase.STRICT:
            tag = "strict"
            ok = (
                cls.cover is not None
                and is_valid_cover(h, cls.cover)
                and len(cls.cover) == rho_value
                and cls.cover.singleton_count == 0
            )
            if not ok:
                violations.append(
                    _violation(h, "strict-witness", "singleton-free minimum cover", None)
                )
        elif cls.case is TheoremCase.EQUALITY:
            tag = "equality"
            for v in members(h.vertices):
                cov = structured_cover(h, v, cls)
                ok = (
                    is_valid_cover(h, cov)
                    and len(cov) == rho_value
                    and cov.singleton_count == 1
                    and (cov.parts[0] == 1 << v or (1 << v) in cov.parts)
                )
                if not ok:
                    violations.append(
                        _violation(
                            h,
                            "structured-cover",
                            f"minimum cover {{v}} + perfect matching for v = {v}",
                            cov.as_lists(),
                        )
                    )
        else:  # pragma: no cover - connected critical cannot be NOT_APPLICABLE
            violations.append(
                _violation(h, "classification", "strict or equality", cls.case.value)
            )

    if h.n <= 2 * (rho_value - 1):
        gallai = check_corollary_gallai(h)
        if gallai.violated:
            violations.append(
                _violation(h, "corollary-gallai", "not critical or not connected", None)
            )
        concrete = check_corollary_concrete(h)
        if concrete.violated:
            violations.append(
                _violation(
                    h, "corollary-concrete", "dropping vertex or split bipartition", None
                )
            )
        if concrete.bipartition is not None:
            # a pair crosses iff some generator meets both sides
            left, right = concrete.bipartition
            if any(g & left and g & right for g in h.generators):
                violations.append(
                    _violation(
                        h,
                        "corollary-concrete",
                        "bipartition with no crossing edge",
                        [members(left), members(right)],
                    )
                )

    return tag, violations


def _instance_stream(cfg: GeneratorConfig) -> Iterator[HereditaryHypergraph]:
    if cfg.mode == "exhaustive":
        return enumerate_hereditary(cfg.n)
    return random_hereditary(cfg)


def verify_universe(cfg: GeneratorConfig) -> VerificationReport:
    """Run the full battery over the configured instance stream.

    Deterministic for a fixed config; the worker count (HHCOVER_WORKERS)
    only fans the same per-instance checks out over processes.
    """
    started = time.perf_counter()
    report = VerificationReport(config=cfg)
    payloads = [(h.vertices, h.generators) for h in _instance_stream(cfg)]

    workers = int(os.environ.get(WORKERS_ENV, "1") or "1")
    if workers > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_instance, payloads, chunksize=64))
    else:
        results = [_check_instance(p) for p in payloads]

    for tag, violations in results:
        report.instances_checked += 1
        if tag in ("strict", "equality", "violation"):
            report.connected_critical_found += 1
        if tag == "strict":
            report.strict_count += 1
        elif tag == "equality":
            report.equality_count += 1
        report.violations.extend(violations)

    report.runtime_seconds = time.perf_counter() - started
    return report
