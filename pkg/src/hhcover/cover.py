"""Exact minimum covers of hereditary hypergraphs.

Because singletons are always hyperedges and a vertex can be dropped from
any hyperedge, minimum covers may be taken to be partitions of the vertex
set into hyperedges; every routine here works with such partitions.

The minimum-size search branches on the lowest uncovered vertex.  For the
cover number alone it is enough to try the inclusion-maximal candidate
parts ``generator & uncovered`` (replacing a part of an optimal partition
by such a candidate and shrinking later parts keeps the partition optimal),
which keeps the branching factor at the number of generators.  Enumeration
and the singleton-count optimum genuinely need non-maximal parts and
enumerate submasks instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HereditaryHypergraph, from_hyperedges, full_set, iter_bits, members, vset
from .core import UncoveredVertex


@dataclass(frozen=True)
class Cover:
    """A partition of the vertex set into hyperedges.

    Parts are bitmasks, kept sorted by their lowest vertex.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "parts", tuple(sorted(self.parts, key=lambda p: p & -p))
        )

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def covered(self) -> int:
        mask = 0
        for p in self.parts:
            mask |= p
        return mask

    @property
    def singleton_count(self) -> int:
        return sum(1 for p in self.parts if p.bit_count() == 1)

    def as_lists(self) -> list[list[int]]:
        return [members(p) for p in self.parts]


@dataclass(frozen=True)
class CoverStats:
    rho: int
    mu: int
    has_singleton_free_min_cover: bool


def is_valid_cover(h: HereditaryHypergraph, cover: Cover) -> bool:
    """Parts nonempty, pairwise disjoint, union the vertex set, each a hyperedge."""
    seen = 0
    for p in cover.parts:
        if p == 0 or seen & p:
            return False
        if not any(p & g == p for g in h.generators):
            return False
        seen |= p
    return seen == h.vertices


def _member_key(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


def _lower_bound(u: int, generators, adjacency) -> int:
    """Parts needed to partition u: isolated vertices force singletons, the
    rest needs at least ceil(size / largest candidate part)."""
    if u == 0:
        return 0
    isolated = 0
    for v in iter_bits(u):
        if not adjacency[v] & u:
            isolated += 1
    rest = u.bit_count() - isolated
    if rest == 0:
        return isolated
    biggest = max(g.bit_count() if (g := gen & u) else 0 for gen in generators)
    return isolated + -(-rest // biggest)


def _maximal_candidates(u: int, v_bit: int, generators) -> list[int]:
    """Inclusion-maximal sets of the form generator & u containing v."""
    cands = {g & u for g in generators if g & v_bit}
    kept = []
    for c in sorted(cands, key=lambda m: -m.bit_count()):
        if not any(c & k == c for k in kept):
            kept.append(c)
    kept.sort(key=lambda c: (-c.bit_count(), _member_key(c)))
    return kept


def _all_candidates(u: int, v_bit: int, generators, min_size: int = 1) -> list[int]:
    """Every hyperedge X with v in X, X within u, deduplicated across
    generators, ordered by size descending then lexicographically."""
    cands = set()
    for g in generators:
        if not g & v_bit:
            continue
        rest = (g & u) & ~v_bit
        sub = rest
        while True:
            x = sub | v_bit
            if x.bit_count() >= min_size:
                cands.add(x)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return sorted(cands, key=lambda c: (-c.bit_count(), _member_key(c)))


def min_cover(h: HereditaryHypergraph) -> tuple[int, Cover]:
    """Exact cover number together with one minimum partition witness.

    Deterministic: branches on the lowest uncovered vertex and tries
    candidate parts largest first (ties broken lexicographically), keeping
    the first optimum found.
    """
    if h.vertices == 0:
        return 0, Cover(())
    generators = h.generators
    adjacency = h.pair_adjacency

    # greedy partition: a valid upper bound and the initial incumbent
    greedy: list[int] = []
    u = h.vertices
    while u:
        v_bit = u & -u
        part = _maximal_candidates(u, v_bit, generators)[0]
        greedy.append(part)
        u &= ~part
    best_size = len(greedy)
    best_parts = tuple(greedy)

    stack_parts: list[int] = []

    def search(u: int) -> None:
        nonlocal best_size, best_parts
        if u == 0:
            if len(stack_parts) < best_size:
                best_size = len(stack_parts)
                best_parts = tuple(stack_parts)
            return
        if len(stack_parts) + _lower_bound(u, generators, adjacency) >= best_size:
            return
        v_bit = u & -u
        for part in _maximal_candidates(u, v_bit, generators):
            stack_parts.append(part)
            search(u & ~part)
            stack_parts.pop()

    search(h.vertices)
    return best_size, Cover(best_parts)


def rho(h: HereditaryHypergraph) -> int:
    return min_cover(h)[0]


def rho_after_each_deletion(h: HereditaryHypergraph) -> dict[int, int]:
    """Exact cover number of every single-vertex deletion.

    Each value must land in [rho - 1, rho]; anything else is a solver bug
    and raises immediately.
    """
    base = rho(h)
    out: dict[int, int] = {}
    for v in members(h.vertices):
        value = rho(h.delete_vertex(v))
        if not base - 1 <= value <= base:
            raise AssertionError(
                f"cover number jumped from {base} to {value} deleting vertex {v}"
            )
        out[v] = value
    return out


def enumerate_min_covers(
    h: HereditaryHypergraph, limit: int = 10**6
) -> tuple[list[Cover], bool]:
    """All partitions of the vertex set into rho hyperedges, in a fixed
    deterministic order, truncated at ``limit`` (flag reports truncation)."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if h.vertices == 0:
        return [Cover(())], False
    target, _ = min_cover(h)
    generators = h.generators
    adjacency = h.pair_adjacency
    results: list[Cover] = []
    truncated = False
    stack_parts: list[int] = []

    def search(u: int) -> None:
        nonlocal truncated
        if truncated:
            return
        depth = len(stack_parts)
        if u == 0:
            if depth == target:
                if len(results) < limit:
                    results.append(Cover(tuple(stack_parts)))
                else:
                    truncated = True
            return
        if depth >= target:
            return
        if depth + _lower_bound(u, generators, adjacency) > target:
            return
        v_bit = u & -u
        for part in _all_candidates(u, v_bit, generators):
            stack_parts.append(part)
            search(u & ~part)
            stack_parts.pop()
            if truncated:
                return

    search(h.vertices)
    return results, truncated


def has_singleton_free_min_cover(h: HereditaryHypergraph) -> tuple[bool, Cover | None]:
    """Whether some minimum cover has every part of size at least two."""
    target, _ = min_cover(h)
    n = h.n
    if 2 * target > n:
        return False, None
    generators = h.generators
    adjacency = h.pair_adjacency
    found: list[Cover] = []
    stack_parts: list[int] = []

    def search(u: int) -> bool:
        depth = len(stack_parts)
        if u == 0:
            if depth == target:
                found.append(Cover(tuple(stack_parts)))
                return True
            return False
        remaining = target - depth
        if remaining <= 0:
            return False
        if u.bit_count() < 2 * remaining:
            return False
        if _lower_bound(u, generators, adjacency) > remaining:
            return False
        for v in iter_bits(u):
            if not adjacency[v] & u:
                return False  # isolated vertex would need a singleton part
        v_bit = u & -u
        for part in _all_candidates(u, v_bit, generators, min_size=2):
            stack_parts.append(part)
            if search(u & ~part):
                return True
            stack_parts.pop()
        return False

    if search(h.vertices):
        return True, found[0]
    return False, None


def mu(h: HereditaryHypergraph, over_min_covers: bool = False) -> tuple[int, Cover]:
    """Maximum number of vertices lying in parts of size >= 2, over all
    covers or (with the flag) over minimum covers only, with a witness.

    Over all covers this is a packing problem: any disjoint family of
    non-singleton hyperedges extends to a partition by adding singletons,
    so the optimum is the best such packing.
    """
    if over_min_covers:
        return _mu_min_covers(h)
    generators = h.generators
    memo: dict[int, tuple[int, int | None]] = {0: (0, None)}

    def best(u: int) -> tuple[int, int | None]:
        cached = memo.get(u)
        if cached is not None:
            return cached
        v_bit = u & -u
        value, choice = best(u & ~v_bit)[0], None
        for part in _all_candidates(u, v_bit, generators, min_size=2):
            candidate = part.bit_count() + best(u & ~part)[0]
            if candidate > value:
                value, choice = candidate, part
        memo[u] = (value, choice)
        return value, choice

    total, _ = best(h.vertices)
    parts = []
    u = h.vertices
    while u:
        _, choice = best(u)
        if choice is None:
            parts.append(u & -u)
            u &= ~(u & -u)
        else:
            parts.append(choice)
            u &= ~choice
    return total, Cover(tuple(parts))


def _mu_min_covers(h: HereditaryHypergraph) -> tuple[int, Cover]:
    target, witness = min_cover(h)
    if h.vertices == 0:
        return 0, witness
    generators = h.generators
    adjacency = h.pair_adjacency
    impossible = -1
    memo: dict[tuple[int, int], tuple[int, int | None]] = {}

    def best(u: int, k: int) -> tuple[int, int | None]:
        if u == 0:
            return (0, None) if k == 0 else (impossible, None)
        if k <= 0 or k > u.bit_count():
            return impossible, None
        if _lower_bound(u, generators, adjacency) > k:
            return impossible, None
        key = (u, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        v_bit = u & -u
        value, choice = impossible, None
        for part in _all_candidates(u, v_bit, generators):
            tail = best(u & ~part, k - 1)[0]
            if tail == impossible:
                continue
            size = part.bit_count()
            candidate = tail + (size if size >= 2 else 0)
            if candidate > value:
                value, choice = candidate, part
        memo[key] = (value, choice)
        return value, choice

    total, _ = best(h.vertices, target)
    if total == impossible:
        raise AssertionError("minimum cover exists but the restricted search found none")
    parts = []
    u, k = h.vertices, target
    while u:
        _, choice = best(u, k)
        parts.append(choice)
        u &= ~choice
        k -= 1
    return total, Cover(tuple(parts))


def cover_stats(h: HereditaryHypergraph) -> CoverStats:
    rho_value, _ = min_cover(h)
    mu_value, _ = mu(h)
    free, _ = has_singleton_free_min_cover(h)
    return CoverStats(rho=rho_value, mu=mu_value, has_singleton_free_min_cover=free)


def set_cover_number(n: int, sets: list[int]) -> int:
    """Exact minimum number of the given sets whose union is {0..n-1}.

    Overlaps are allowed; this is plain set cover over an explicit list,
    used to compare an explicit hypergraph against its hereditary closure.
    """
    universe = full_set(n)
    union = 0
    for s in sets:
        union |= s
    if union != universe:
        raise UncoveredVertex(members(universe & ~union)[0])
    if n == 0:
        return 0
    # dominated sets never help a cover
    masks = []
    for s in sorted(set(sets), key=lambda m: -m.bit_count()):
        if s and not any(s & k == s for k in masks):
            masks.append(s)

    covers_of = [tuple(i for i, s in enumerate(masks) if s >> v & 1) for v in range(n)]

    greedy_size = 0
    covered = 0
    while covered != universe:
        gain, pick = 0, None
        for s in masks:
            g = (s & ~covered).bit_count()
            if g > gain:
                gain, pick = g, s
        covered |= pick
        greedy_size += 1
    best = greedy_size

    def search(covered: int, used: int) -> None:
        nonlocal best
        if covered == universe:
            best = min(best, used)
            return
        if used + 1 >= best:
            return
        biggest = max((s & ~covered).bit_count() for s in masks)
        missing = (universe & ~covered).bit_count()
        if used + -(-missing // biggest) >= best:
            return
        # branch on the uncovered vertex with the fewest covering sets
        pivot = min(
            iter_bits(universe & ~covered), key=lambda v: (len(covers_of[v]), v)
        )
        options = sorted(
            covers_of[pivot], key=lambda i: (-(masks[i] & ~covered).bit_count(), i)
        )
        for i in options:
            search(covered | masks[i], used + 1)

    search(0, 0)
    return best


def rho_closure_invariance_check(n: int, hyperedges: list[int | list[int]]) -> bool:
    """Cross-check that covering with the explicit hyperedges needs exactly
    as many sets as covering with their hereditary closure.

    Always true mathematically; a False return signals a solver bug.
    """
    masks = [e if isinstance(e, int) else vset(e) for e in hyperedges]
    explicit = set_cover_number(n, masks)
    closure, _ = min_cover(from_hyperedges(n, masks))
    return explicit == closure
