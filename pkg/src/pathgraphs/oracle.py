"""Brute-force path-graph decision over labeled trees on the clique set.

A graph is a path graph iff some tree on its maximal cliques makes the
cliques through each vertex a path.  Small clique sets are decided by
walking every Prüfer sequence; larger ones by an exhaustive edge-by-edge
search with pruning.  Neither route uses separators or colorings.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, product

from .chordal import CliqueTree, maximal_cliques, verify_clique_path_tree
from .graph import SimpleGraph

__all__ = [
    "CliqueCapError",
    "OracleResult",
    "PathRealization",
    "decode_prufer",
    "oracle_is_path_graph",
    "realize_paths",
]

PRUFER_MAX_CLIQUES = 6


class CliqueCapError(ValueError):
    pass


@dataclass(frozen=True)
class PathRealization:
    host_tree: CliqueTree
    vertex_paths: dict[str, tuple[int, ...]]

    def to_text(self) -> str:
        lines = []
        for v, path in sorted(self.vertex_paths.items()):
            lines.append(f"{v}: " + " - ".join(self.host_tree.label(i).replace(" ", "") for i in path))
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        return self.host_tree.to_dot("host_tree")


@dataclass(frozen=True)
class OracleResult:
    is_path_graph: bool
    realization: PathRealization | None
    trees_examined: int
    method: str

    def __bool__(self) -> bool:
        return self.is_path_graph


def decode_prufer(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``range(n)`` with Prüfer sequence ``seq``."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _vertex_masks(G: SimpleGraph, cliques: list[frozenset[str]]) -> list[int]:
    masks = set()
    for v in G.vertices:
        m = 0
        for i, c in enumerate(cliques):
            if v in c:
                m |= 1 << i
        if m & (m - 1):
            masks.add(m)
    return sorted(masks)


def _is_path_tree(adj: list[int], masks: list[int]) -> bool:
    for m in masks:
        size = m.bit_count() if hasattr(m, "bit_count") else bin(m).count("1")
        deg_sum = 0
        x = m
        while x:
            low = x & -x
            d = bin(adj[low.bit_length() - 1] & m).count("1")
            if d > 2:
                return False
            deg_sum += d
            x ^= low
        if deg_sum != 2 * (size - 1):
            return False
    return True


def _prufer_search(n: int, masks: list[int]) -> tuple[list[tuple[int, int]] | None, int]:
    if n == 1:
        return [], 1
    examined = 0
    for seq in product(range(n), repeat=n - 2):
        examined += 1
        edges = decode_prufer(seq, n)
        adj = [0] * n
        for a, b in edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        if _is_path_tree(adj, masks):
            return edges, examined
    return None, examined


def _backtrack_search(n: int, cliques: list[frozenset[str]], masks: list[int]) -> tuple[list[tuple[int, int]] | None, int]:
    """Exhaustive search over trees whose edges join meeting cliques.

    In a clique path tree of a connected graph adjacent cliques always
    share a vertex, so other edges need not be tried.
    """
    if n == 1:
        return [], 1
    candidates = [(a, b) for a, b in combinations(range(n), 2) if cliques[a] & cliques[b]]
    # masks containing both ends of each candidate edge
    edge_masks = [[m for m in masks if (m >> a) & 1 and (m >> b) & 1] for a, b in candidates]
    adj = [0] * n
    root = list(range(n))
    chosen: list[tuple[int, int]] = []
    counter = [0]

    def find(x):
        while root[x] != x:
            x = root[x]
        return x

    def can_connect(m: int, start: int) -> bool:
        # can chosen edges plus candidates from ``start`` still connect mask m?
        lo = (m & -m).bit_length() - 1
        reach = 1 << lo
        pool = [(a, b) for a, b in chosen if (m >> a) & 1 and (m >> b) & 1]
        pool += [(a, b) for a, b in candidates[start:] if (m >> a) & 1 and (m >> b) & 1]
        grown = True
        while grown:
            grown = False
            for a, b in pool:
                ia, ib = (reach >> a) & 1, (reach >> b) & 1
                if ia != ib:
                    reach |= (1 << a) | (1 << b)
                    grown = True
        return reach & m == m

    def rec(k: int) -> bool:
        if len(chosen) == n - 1:
            counter[0] += 1
            return _is_path_tree(adj, masks)
        if len(candidates) - k < n - 1 - len(chosen):
            return False
        a, b = candidates[k]
        ra, rb = find(a), find(b)
        if ra != rb and all(bin(adj[a] & m).count("1") < 2 and bin(adj[b] & m).count("1") < 2 for m in edge_masks[k]):
            chosen.append((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            root[ra] = rb
            if rec(k + 1):
                return True
            root[ra] = ra
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            chosen.pop()
        if all(can_connect(m, k + 1) for m in edge_masks[k]):
            return rec(k + 1)
        return False

    found = rec(0)
    return (list(chosen) if found else None), counter[0]


def oracle_is_path_graph(G: SimpleGraph, max_cliques: int = 9, method: str = "auto") -> OracleResult:
    """Decide path-graph membership by exhaustive search over clique trees.

    ``method`` is ``"prufer"`` (every labeled tree, first success in
    lexicographic Prüfer order), ``"backtrack"`` (pruned edge search per
    connected component) or ``"auto"`` (Prüfer up to six cliques).
    """
    cliques = maximal_cliques(G)
    c = len(cliques)
    if c > max_cliques:
        raise CliqueCapError(f"{c} maximal cliques exceed the oracle cap of {max_cliques}")
    if method == "auto":
        method = "prufer" if c <= PRUFER_MAX_CLIQUES else "backtrack"
    masks = _vertex_masks(G, cliques)
    if c == 0:
        return OracleResult(True, None, 0, method)
    if method == "prufer":
        edges, examined = _prufer_search(c, masks)
    elif method == "backtrack":
        edges, examined = _backtrack_components(G, cliques, masks)
    else:
        raise ValueError(f"unknown method {method!r}")
    if edges is None:
        return OracleResult(False, None, examined, method)
    tree = CliqueTree(tuple(cliques), frozenset(edges))
    return OracleResult(True, realize_paths(G, tree), examined, method)


def _backtrack_components(G: SimpleGraph, cliques, masks):
    # group cliques by connected component of the clique intersection graph
    n = len(cliques)
    group = list(range(n))
    for a, b in combinations(range(n), 2):
        if cliques[a] & cliques[b]:
            ga, gb = group[a], group[b]
            if ga != gb:
                group = [ga if g == gb else g for g in group]
    edges, total = [], 0
    firsts = []
    for g in sorted(set(group)):
        idx = [i for i in range(n) if group[i] == g]
        local = [cliques[i] for i in idx]
        lmasks = sorted({_remap(m, idx) for m in masks if _remap(m, idx)} - {0})
        lmasks = [m for m in lmasks if m & (m - 1)]
        found, examined = _backtrack_search(len(idx), local, lmasks)
        total += examined
        if found is None:
            return None, total
        edges += [(idx[a], idx[b]) for a, b in found]
        firsts.append(idx[0])
    edges += list(zip(firsts, firsts[1:]))
    return edges, total


def _remap(mask: int, idx: list[int]) -> int:
    out = 0
    for k, i in enumerate(idx):
        if (mask >> i) & 1:
            out |= 1 << k
    return out


def realize_paths(G: SimpleGraph, T: CliqueTree) -> PathRealization:
    """Each vertex's cliques, listed in order along the path they form in ``T``."""
    if not verify_clique_path_tree(G, T):
        raise ValueError("not a clique path tree of G")
    adj = T.adjacency()
    paths = {}
    for v in G.vertices:
        nodes = set(T.nodes_containing(v))
        ends = sorted(i for i in nodes if len(adj[i] & nodes) <= 1)
        order = [ends[0]]
        while len(order) < len(nodes):
            nxt = (adj[order[-1]] & nodes) - set(order)
            order.append(min(nxt))
        paths[v] = tuple(order)
    for u, v in combinations(G.vertices, 2):
        assert G.has_edge(u, v) == bool(set(paths[u]) & set(paths[v])), (u, v)
    return PathRealization(T, paths)
