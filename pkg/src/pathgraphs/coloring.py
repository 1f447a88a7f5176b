"""Upper bounds, the D-partition, and the partial / weak / strong colorings.

Colors are ``1..l`` for the ``l`` upper bounds plus the shared overflow
color ``l + 1``.  Conflicts are raised as exceptions carrying enough data to
build a forbidden-subgraph certificate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .separation import SeparationProfile

__all__ = [
    "ColoringConflict",
    "DPartition",
    "PartialColoring",
    "PartialColoringConflict",
    "TooManyUppersError",
    "TripleWitness",
    "TwoColoringConflict",
    "WeakColoring",
    "cross_set",
    "d_partition",
    "find_full_antipodal_triple",
    "is_strong_coloring",
    "partial_coloring",
    "strong_coloring_bruteforce",
    "upper_bounds",
    "validate_weak_coloring",
    "weak_coloring",
]

Block = tuple  # (i,) for D_i, (i, j) for D_{i,j}


class ColoringConflict(Exception):
    """Base class for obstructions met while coloring."""


class TooManyUppersError(ValueError):
    """A part sits below three or more upper bounds."""

    def __init__(self, part: int, uppers: tuple[int, ...]):
        self.part = part
        self.uppers = uppers
        super().__init__(f"part {part} is dominated by uppers {uppers}; look for a full antipodal triple first")


class PartialColoringConflict(ColoringConflict):
    """``part`` in D_{i,j} is antipodal to ``left`` in D_i and ``right`` in D_j."""

    def __init__(self, part: int, left: int, right: int, i: int, j: int):
        self.part, self.left, self.right, self.i, self.j = part, left, right, i, j
        super().__init__(f"part {part} in D_{i},{j} is antipodal to {left} in D_{i} and {right} in D_{j}")


class TwoColoringConflict(ColoringConflict):
    """The 2-coloring of one block failed.

    ``kind`` is ``"odd_cycle"``, ``"even_path"`` (even number of vertices,
    equal forced end colors) or ``"odd_path"`` (odd number of vertices,
    different forced end colors).
    """

    def __init__(self, kind: str, block: Block, parts: tuple[int, ...], forced: dict[int, int] | None = None):
        self.kind = kind
        self.block = block
        self.parts = parts
        self.forced = dict(forced or {})
        super().__init__(f"{kind} in D_{','.join(map(str, block))}: {parts}")


@dataclass(frozen=True)
class TripleWitness:
    parts: tuple[int, int, int]
    witness_vertex: str


@dataclass(frozen=True)
class DPartition:
    uppers: tuple[int, ...]
    singles: dict[int, frozenset[int]]
    pairs: dict[tuple[int, int], frozenset[int]]

    @property
    def n_uppers(self) -> int:
        return len(self.uppers)

    def blocks(self) -> list[tuple[Block, frozenset[int]]]:
        out = [((i,), self.singles[i]) for i in sorted(self.singles)]
        out += [(ij, self.pairs[ij]) for ij in sorted(self.pairs)]
        return out

    def block_of(self, part: int) -> Block:
        for key, members in self.blocks():
            if part in members:
                return key
        raise KeyError(part)

    def upper(self, i: int) -> int:
        """Part id of ``u_i`` (1-based)."""
        return self.uppers[i - 1]

    def palette(self, block: Block) -> tuple[int, int]:
        return (block[0], self.n_uppers + 1) if len(block) == 1 else block

    def covers(self, part_ids) -> bool:
        seen = [p for _, members in self.blocks() for p in members]
        return len(seen) == len(set(seen)) and set(seen) == set(part_ids)


@dataclass(frozen=True)
class PartialColoring:
    assignment: dict[int, int]


@dataclass(frozen=True)
class WeakColoring:
    assignment: dict[int, int]
    partial: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, int]:
        return {str(k): v for k, v in sorted(self.assignment.items())}


def upper_bounds(profile: SeparationProfile) -> tuple[int, ...]:
    """Dominance-maximal parts in id order.  The profile must be quotiented."""
    for a, b in profile.dominance:
        if (b, a) in profile.dominance:
            raise ValueError("dominance is not antisymmetric; quotient the profile first")
    return tuple(p for p in profile.part_ids if not profile.dominators(p))


def d_partition(profile: SeparationProfile, uppers: tuple[int, ...] | None = None) -> DPartition:
    if uppers is None:
        uppers = upper_bounds(profile)
    index = {u: i for i, u in enumerate(uppers, start=1)}
    singles = {i: set() for i in index.values()}
    pairs: dict[tuple[int, int], set[int]] = {}
    for p in profile.part_ids:
        above = tuple(sorted(index[u] for u in uppers if profile.leq(p, u)))
        if len(above) == 1:
            singles[above[0]].add(p)
        elif len(above) == 2:
            pairs.setdefault(above, set()).add(p)
        elif len(above) > 2:
            raise TooManyUppersError(p, tuple(uppers[i - 1] for i in above))
        else:
            raise ValueError(f"part {p} is below no upper bound")
    return DPartition(
        tuple(uppers),
        {i: frozenset(s) for i, s in singles.items()},
        {ij: frozenset(s) for ij, s in pairs.items()},
    )


def find_full_antipodal_triple(profile: SeparationProfile) -> TripleWitness | None:
    for v, around in profile.neighboring_sets():
        ids = sorted(around)
        for a, b, c in combinations(ids, 3):
            if profile.is_antipodal(a, b) and profile.is_antipodal(a, c) and profile.is_antipodal(b, c):
                return TripleWitness((a, b, c), v)
    return None


def cross_set(profile: SeparationProfile, dp: DPartition) -> frozenset[int]:
    cross = set()
    for _, members in dp.blocks():
        for p in members:
            if profile.antipodal_neighbors(p) - members:
                cross.add(p)
    return frozenset(cross)


def partial_coloring(profile: SeparationProfile, dp: DPartition) -> PartialColoring:
    """The forced coloring of the uppers and of the crossing parts.

    Raises :class:`PartialColoringConflict` when a part of some D_{i,j} is
    pushed towards both colors.
    """
    f = {u: i for i, u in enumerate(dp.uppers, start=1)}
    for (i,), members in [(b, m) for b, m in dp.blocks() if len(b) == 1]:
        for p in members:
            if profile.antipodal_neighbors(p) - members:
                f[p] = i
    for (i, j), members in [(b, m) for b, m in dp.blocks() if len(b) == 2]:
        for p in sorted(members):
            outside = sorted(profile.antipodal_neighbors(p) - members)
            if not outside:
                continue
            in_i = [q for q in outside if q in dp.singles[i]]
            in_j = [q for q in outside if q in dp.singles[j]]
            stray = [q for q in outside if q not in dp.singles[i] and q not in dp.singles[j]]
            if stray:
                # impossible without a full antipodal triple
                raise ValueError(f"part {p} in D_{i},{j} is antipodal to {stray} outside D_{i} | D_{j}")
            if in_i and in_j:
                raise PartialColoringConflict(p, in_i[0], in_j[0], i, j)
            f[p] = i if in_j else j
    return PartialColoring(f)


def _bfs_path(adj: dict[int, list[int]], src: int, dst: int) -> list[int]:
    parent = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = []
    u = dst
    while u is not None:
        path.append(u)
        u = parent[u]
    return path[::-1]


def _two_color_block(profile: SeparationProfile, block: Block, members: frozenset[int],
                     palette: tuple[int, int], forced: dict[int, int]) -> dict[int, int]:
    adj = {p: sorted(profile.antipodal_neighbors(p) & members) for p in members}
    colors: dict[int, int] = {}
    done: set[int] = set()
    for start in sorted(members):
        if start in done:
            continue
        # collect the component, then root it at its smallest forced member
        comp, queue = {start}, deque([start])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        done |= comp
        pinned = sorted(p for p in comp if p in forced)
        root = pinned[0] if pinned else start
        depth, parent = {root: 0}, {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
        bad_edges = [(depth[x] + depth[y], x, y) for x in comp for y in adj[x] if x < y and depth[x] % 2 == depth[y] % 2]
        if bad_edges:
            _, x, y = min(bad_edges)
            px, py = [x], [y]
            while px[-1] != py[-1]:
                if depth[px[-1]] >= depth[py[-1]]:
                    px.append(parent[px[-1]])
                else:
                    py.append(parent[py[-1]])
            cycle = px + py[-2::-1]
            raise TwoColoringConflict("odd_cycle", block, tuple(cycle))
        first = forced.get(root, palette[0])
        other = palette[1] if first == palette[0] else palette[0]
        for p in comp:
            colors[p] = first if depth[p] % 2 == 0 else other
        for p in pinned[1:]:
            if colors[p] != forced[p]:
                path = _bfs_path(adj, root, p)
                kind = "odd_path" if len(path) % 2 == 1 else "even_path"
                raise TwoColoringConflict(kind, block, tuple(path), {q: forced[q] for q in (root, p)})
    return colors


def weak_coloring(profile: SeparationProfile, dp: DPartition, pc: PartialColoring) -> WeakColoring:
    """Extend the partial coloring by 2-coloring each block.

    D_i uses colors ``{i, l+1}`` and D_{i,j} uses ``{i, j}``; members colored
    by ``pc`` are fixed.  Raises :class:`TwoColoringConflict` on failure.
    """
    f: dict[int, int] = {}
    for block, members in dp.blocks():
        forced = {p: pc.assignment[p] for p in members if p in pc.assignment}
        f.update(_two_color_block(profile, block, members, dp.palette(block), forced))
    return WeakColoring(f, dict(pc.assignment))


def validate_weak_coloring(profile: SeparationProfile, dp: DPartition, f: dict[int, int]) -> list[str]:
    """Check every clause of the partial and weak coloring definitions.

    Returns a list of violations; empty means valid.
    """
    problems = []
    ell = dp.n_uppers
    if set(f) != set(profile.part_ids):
        problems.append("coloring does not cover every part")
        return problems
    for i, u in enumerate(dp.uppers, start=1):
        if f[u] != i:
            problems.append(f"upper u_{i}={u} has color {f[u]}")
    for (i,), members in [(b, m) for b, m in dp.blocks() if len(b) == 1]:
        for p in members:
            if f[p] not in (i, ell + 1):
                problems.append(f"part {p} in D_{i} has color {f[p]}")
            if any(q not in members for q in profile.antipodal_neighbors(p)) and f[p] != i:
                problems.append(f"crossing part {p} in D_{i} is not colored {i}")
    for (i, j), members in [(b, m) for b, m in dp.blocks() if len(b) == 2]:
        for p in members:
            if f[p] not in (i, j):
                problems.append(f"part {p} in D_{i},{j} has color {f[p]}")
            for q in profile.antipodal_neighbors(p) - members:
                if q in dp.singles[j] and f[p] != i:
                    problems.append(f"part {p} antipodal to {q} in D_{j} is not colored {i}")
                if q in dp.singles[i] and f[p] != j:
                    problems.append(f"part {p} antipodal to {q} in D_{i} is not colored {j}")
    for block, members in dp.blocks():
        for p in members:
            for q in profile.antipodal_neighbors(p) & members:
                if p < q and f[p] == f[q]:
                    problems.append(f"antipodal parts {p},{q} in the same block share color {f[p]}")
    return problems


def _neighboring_triples(profile: SeparationProfile) -> set[tuple[int, int, int]]:
    triples = set()
    for _, around in profile.neighboring_sets():
        triples.update(combinations(sorted(around), 3))
    return triples


def is_strong_coloring(profile: SeparationProfile, f: dict[int, int]) -> bool:
    if any(f[a] == f[b] for a, b in map(tuple, profile.antipodal)):
        return False
    return all(len({f[a], f[b], f[c]}) <= 2 for a, b, c in _neighboring_triples(profile))


def strong_coloring_bruteforce(profile: SeparationProfile, max_parts: int = 9) -> dict[int, int] | None:
    """Exhaustive search over set partitions of the parts.

    Antipodal parts get different colors and every neighboring triple uses
    at most two colors.  Returns a coloring or None.
    """
    ids = list(profile.part_ids)
    if len(ids) > max_parts:
        raise ValueError(f"{len(ids)} parts exceed the brute-force cap of {max_parts}")
    pos = {p: k for k, p in enumerate(ids)}
    anti_before = [[pos[q] for q in profile.antipodal_neighbors(p) if pos[q] < k] for k, p in enumerate(ids)]
    triples_closing = [[] for _ in ids]
    for t in _neighboring_triples(profile):
        a, b, c = sorted(pos[x] for x in t)
        triples_closing[c].append((a, b))
    colors = [0] * len(ids)

    def extend(k: int, used: int) -> bool:
        if k == len(ids):
            return True
        for c in range(1, used + 2):
            if any(colors[q] == c for q in anti_before[k]):
                continue
            if any(len({colors[a], colors[b], c}) == 3 for a, b in triples_closing[k]):
                continue
            colors[k] = c
            if extend(k + 1, max(used, c)):
                return True
        colors[k] = 0
        return False

    if extend(0, 0):
        return {p: colors[pos[p]] for p in ids}
    return None
