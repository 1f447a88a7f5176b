"""Chordality, maximal cliques, clique trees and clique separators."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import SimpleGraph, connected_components

__all__ = [
    "CliqueTree",
    "NotChordalError",
    "build_clique_tree",
    "clique_separators",
    "elimination_failure",
    "find_hole",
    "is_chordal",
    "maximal_cliques",
    "mcs_order",
    "verify_clique_path_tree",
]


class NotChordalError(ValueError):
    def __init__(self, hole):
        self.hole = hole
        super().__init__(f"graph is not chordal (hole: {' '.join(hole)})")


def mcs_order(G: SimpleGraph) -> list[str]:
    """Maximum cardinality search, returned as an elimination order.

    The visit order is reversed, so the result is a perfect elimination
    order whenever ``G`` is chordal.  Ties go to the smallest label.
    """
    weight = {v: 0 for v in G.vertices}
    visited: list[str] = []
    # buckets[w] holds unvisited vertices of weight w
    buckets: list[set[str]] = [set(G.vertices)]
    top = 0
    for _ in range(len(G)):
        while top > 0 and not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].discard(v)
        visited.append(v)
        weight[v] = -1
        for w in G.neighbors(v):
            k = weight[w]
            if k < 0:
                continue
            buckets[k].discard(w)
            weight[w] = k + 1
            if k + 1 == len(buckets):
                buckets.append(set())
            buckets[k + 1].add(w)
            top = max(top, k + 1)
    visited.reverse()
    return visited


def elimination_failure(G: SimpleGraph, order: list[str]) -> str | None:
    """First vertex whose later neighbours are not a clique, else None."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in G.neighbors(v) if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        rest = set(later)
        rest.discard(p)
        if not rest <= G.neighbors(p):
            return v
    return None


def _hole_through(G: SimpleGraph, v: str) -> list[str] | None:
    nbrs = G.neighbors(v)
    for x, y in combinations(sorted(nbrs), 2):
        if G.has_edge(x, y):
            continue
        blocked = (nbrs - {x, y}) | {v}
        parent = {x: None}
        queue = deque([x])
        while queue and y not in parent:
            u = queue.popleft()
            for w in sorted(G.neighbors(u)):
                if w not in parent and w not in blocked:
                    parent[w] = u
                    queue.append(w)
        if y in parent:
            path = []
            u = y
            while u is not None:
                path.append(u)
                u = parent[u]
            return [v] + path[::-1]
    return None


def _is_hole(G: SimpleGraph, cycle: list[str]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = (j - i) in (1, k - 1)
            if G.has_edge(cycle[i], cycle[j]) != adjacent:
                return False
    return True


def find_hole(G: SimpleGraph, start: str | None = None) -> list[str] | None:
    """A chordless cycle of length at least four, or None if ``G`` is chordal."""
    candidates = list(G.vertices)
    if start is not None:
        candidates.remove(start)
        candidates.insert(0, start)
    for v in candidates:
        hole = _hole_through(G, v)
        if hole is not None:
            assert _is_hole(G, hole), hole
            return hole
    return None


def is_chordal(G: SimpleGraph) -> tuple[bool, list[str] | None]:
    """``(True, None)`` for chordal graphs, else ``(False, hole)``."""
    bad = elimination_failure(G, mcs_order(G))
    if bad is None:
        return True, None
    hole = find_hole(G, start=bad)
    assert hole is not None, "elimination check failed but no hole found"
    return False, hole


def _require_chordal(G: SimpleGraph) -> list[str]:
    order = mcs_order(G)
    bad = elimination_failure(G, order)
    if bad is not None:
        raise NotChordalError(find_hole(G, start=bad))
    return order


def maximal_cliques(G: SimpleGraph) -> list[frozenset[str]]:
    """Maximal cliques of a chordal graph, sorted by their sorted members."""
    order = _require_chordal(G)
    pos = {v: i for i, v in enumerate(order)}
    candidates = []
    for v in order:
        candidates.append(frozenset([v, *(w for w in G.neighbors(v) if pos[w] > pos[v])]))
    candidates.sort(key=len, reverse=True)
    cliques: list[frozenset[str]] = []
    for c in candidates:
        if not any(c <= k for k in cliques):
            cliques.append(c)
    return sorted(cliques, key=sorted)


@dataclass(frozen=True)
class CliqueTree:
    """A tree whose nodes are indices into ``cliques``."""

    cliques: tuple[frozenset[str], ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(sorted(e)) for e in self.edges))

    def adjacency(self) -> dict[int, set[int]]:
        adj = {i: set() for i in range(len(self.cliques))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_tree(self) -> bool:
        n = len(self.cliques)
        if n == 0 or len(self.edges) != n - 1:
            return n == 0 and not self.edges
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for b in adj[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == n

    def nodes_containing(self, v: str) -> list[int]:
        return [i for i, c in enumerate(self.cliques) if v in c]

    def label(self, i: int) -> str:
        return " ".join(sorted(self.cliques[i]))

    def to_dot(self, name: str = "clique_tree") -> str:
        lines = [f"graph {name} {{"]
        for i in range(len(self.cliques)):
            lines.append(f'  {i} [label="{self.label(i)}"];')
        for a, b in sorted(self.edges):
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "cliques": [sorted(c) for c in self.cliques],
            "edges": [list(e) for e in sorted(self.edges)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "CliqueTree":
        return cls(
            tuple(frozenset(c) for c in data["cliques"]),
            frozenset(tuple(e) for e in data["edges"]),
        )


def _induces(tree_adj: dict[int, set[int]], nodes: list[int], *, path: bool) -> bool:
    if len(nodes) <= 1:
        return True
    ns = set(nodes)
    degrees = [len(tree_adj[i] & ns) for i in nodes]
    if path and max(degrees) > 2:
        return False
    # a sub-forest of a tree is connected iff it has |nodes| - 1 edges
    return sum(degrees) == 2 * (len(nodes) - 1)


def build_clique_tree(G: SimpleGraph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph.

    Ties are broken by clique order.  Cliques of different components are
    joined by weight-zero edges.
    """
    cliques = maximal_cliques(G)
    n = len(cliques)
    candidates = sorted(
        ((-len(cliques[a] & cliques[b]), a, b) for a, b in combinations(range(n), 2)),
    )
    root = list(range(n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, a, b in candidates:
        ra, rb = find(a), find(b)
        if ra != rb:
            root[ra] = rb
            edges.append((a, b))
            if len(edges) == n - 1:
                break
    tree = CliqueTree(tuple(cliques), frozenset(edges))
    adj = tree.adjacency()
    for v in G.vertices:
        assert _induces(adj, tree.nodes_containing(v), path=False), v
    return tree


def clique_separators(G: SimpleGraph, cliques: list[frozenset[str]] | None = None) -> list[frozenset[str]]:
    """Maximal cliques whose removal disconnects the connected graph ``G``."""
    if cliques is None:
        cliques = maximal_cliques(G)
    if len(connected_components(G)) > 1:
        raise ValueError("clique_separators expects a connected graph")
    return [q for q in cliques if len(connected_components(G, removed=q)) >= 2]


def verify_clique_path_tree(G: SimpleGraph, T: CliqueTree) -> bool:
    """True iff ``T`` is a tree on the cliques of ``G`` and every vertex's cliques form a path."""
    if sorted(T.cliques, key=sorted) != maximal_cliques(G) or len(set(T.cliques)) != len(T.cliques):
        raise ValueError("tree nodes are not the maximal cliques of G")
    if not T.is_tree():
        return False
    adj = T.adjacency()
    return all(_induces(adj, T.nodes_containing(v), path=True) for v in G.vertices)
