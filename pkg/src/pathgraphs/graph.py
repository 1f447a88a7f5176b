"""Immutable simple graphs with string vertex labels.

Vertices are ordered lexicographically by label.  Every "pick any" choice made
elsewhere in the package follows this order, so results are reproducible.
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import Iterable, Iterator

__all__ = [
    "EdgeListError",
    "SimpleGraph",
    "check_graph",
    "connected_components",
    "induced_subgraph",
    "parse_edge_list",
    "serialize_edge_list",
]


class EdgeListError(ValueError):
    """Raised for malformed edge-list input."""


class SimpleGraph:
    """A finite simple undirected graph.

    Parameters
    ----------
    vertices : iterable of str
        Declared vertices.  Endpoints of ``edges`` are added implicitly.
    edges : iterable of pairs of str
        Undirected edges.  Self-loops are rejected, repeated edges collapse.
    """

    __slots__ = ("_adj", "_vertices", "_n_edges")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        adj: dict[str, set[str]] = {}
        for v in vertices:
            adj.setdefault(_label(v), set())
        for edge in edges:
            u, v = edge
            u, v = _label(u), _label(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._vertices = tuple(sorted(adj))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._n_edges = sum(len(n) for n in adj.values()) // 2

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def edges(self) -> list[tuple[str, str]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u in self._vertices for v in self._adj[u] if u < v)

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return self._n_edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={len(self)}, m={self.n_edges})"

    def is_clique(self, vertices: Iterable[str]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self._vertices)
        g.add_edges_from(self.edges())
        return g


def _label(v) -> str:
    if not isinstance(v, str):
        raise TypeError(f"vertex labels must be str, got {type(v).__name__}")
    if not v or any(c.isspace() for c in v):
        raise ValueError(f"invalid vertex label {v!r}")
    return v


def induced_subgraph(G: SimpleGraph, S: Iterable[str]) -> SimpleGraph:
    keep = frozenset(S)
    unknown = keep.difference(G.vertices)
    if unknown:
        raise KeyError(f"unknown vertices: {sorted(unknown)}")
    edges = [(u, v) for u in keep for v in G.neighbors(u) & keep if u < v]
    return SimpleGraph(keep, edges)


def connected_components(G: SimpleGraph, removed: Iterable[str] = ()) -> list[frozenset[str]]:
    """Components of ``G`` minus ``removed``, ordered by smallest member."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in G.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the edge-list format.

    One edge per line as two whitespace-separated labels.  ``#`` starts a
    comment line and ``v LABEL`` declares a (possibly isolated) vertex.
    Duplicate edges are dropped with a warning.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(f"line {lineno}: expected two labels, got {line!r}")
        a, b = tokens
        if a == "v":
            vertices.append(b)
            continue
        if a == b:
            raise EdgeListError(f"line {lineno}: self-loop at {a!r}")
        key = frozenset((a, b))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {a} {b} ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append((a, b))
    return SimpleGraph(vertices, edges)


def serialize_edge_list(G: SimpleGraph) -> str:
    """Canonical edge-list text: isolated vertices first, then sorted edges."""
    lines = [f"v {v}" for v in G.vertices if G.degree(v) == 0]
    for u, v in G.edges():
        # "v x" would read back as a vertex declaration
        lines.append(f"{v} {u}" if u == "v" else f"{u} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def check_graph(G) -> SimpleGraph:
    """Coerce ``G`` into a :class:`SimpleGraph`.

    Accepts a SimpleGraph, edge-list text, a networkx graph, or an iterable
    of edge pairs.
    """
    if isinstance(G, SimpleGraph):
        return G
    if isinstance(G, str):
        return parse_edge_list(G)
    if hasattr(G, "nodes") and hasattr(G, "edges"):
        if G.is_directed() or G.is_multigraph():
            raise ValueError("only simple undirected graphs are supported")
        return SimpleGraph((str(v) for v in G.nodes), ((str(u), str(v)) for u, v in G.edges))
    try:
        return SimpleGraph((), [tuple(e) for e in G])
    except TypeError as exc:
        raise TypeError(f"cannot interpret {type(G).__name__} as a graph") from exc
