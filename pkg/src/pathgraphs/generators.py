"""Seeded instance generators for tests and the self-test suites."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .chordal import is_chordal
from .graph import SimpleGraph
from .separation import SeparationProfile, profile_from_traces

__all__ = [
    "MODELS",
    "all_labeled_graphs",
    "generate",
    "random_separator_graph",
    "random_subtree_graph",
    "random_trace_profile",
    "random_tree",
    "template_graph",
    "template_traces",
]

MODELS = ("subtree",)


def random_tree(n: int, rng: random.Random) -> list[list[int]]:
    """Adjacency lists of a uniform random labeled tree (random Prüfer code)."""
    adj: list[list[int]] = [[] for _ in range(n)]
    if n < 2:
        return adj
    from .oracle import decode_prufer

    for a, b in decode_prufer(tuple(rng.randrange(n) for _ in range(n - 2)), n):
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _random_subtree(adj: list[list[int]], size: int, rng: random.Random) -> set[int]:
    start = rng.randrange(len(adj))
    nodes = {start}
    frontier = set(adj[start])
    while len(nodes) < size and frontier:
        nxt = rng.choice(sorted(frontier))
        nodes.add(nxt)
        frontier |= set(adj[nxt])
        frontier -= nodes
    return nodes


def random_subtree_graph(
    n: int,
    seed: int,
    n_vertices: int | None = None,
    max_subtree: int | None = None,
) -> SimpleGraph:
    """Intersection graph of random subtrees of a random host tree.

    The host tree has ``n`` nodes; ``n_vertices`` (default ``n``) subtrees of
    at most ``max_subtree`` nodes each become the vertices ``v0, v1, ...``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    host = random_tree(n, rng)
    k = n if n_vertices is None else n_vertices
    cap = max_subtree or max(1, min(n, 4))
    width = len(str(max(k - 1, 0)))
    labels = [f"v{i:0{width}d}" for i in range(k)]
    subtrees = [_random_subtree(host, rng.randint(1, cap), rng) for _ in range(k)]
    edges = [(labels[a], labels[b]) for a, b in combinations(range(k), 2) if subtrees[a] & subtrees[b]]
    G = SimpleGraph(labels, edges)
    assert is_chordal(G)[0], "subtree intersection graphs are chordal"
    return G


def generate(model: str, n: int, seed: int) -> SimpleGraph:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    return random_subtree_graph(n, seed)


def all_labeled_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labeled simple graph on the vertices ``0 .. n-1``."""
    labels = [str(i) for i in range(n)]
    pairs = list(combinations(labels, 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(labels, [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1])


def _random_part_traces(rng: random.Random, Q: list[str], pool: frozenset[str] | None = None) -> list[frozenset[str]]:
    # a largest trace inside ``pool`` first, then up to two of its proper subsets
    if pool is None:
        top = frozenset(rng.sample(Q, rng.randint(1, len(Q) - 1)))
    else:
        top = frozenset(rng.sample(sorted(pool), rng.randint(1, len(pool))))
    out = [top]
    for _ in range(rng.randint(0, 2)):
        if len(top) > 1:
            sub = frozenset(rng.sample(sorted(top), rng.randint(1, len(top) - 1)))
            if sub not in out:
                out.append(sub)
    return out


def random_separator_graph(seed: int, max_parts: int = 7, max_q: int = 5) -> SimpleGraph:
    """A clique ``Q`` with random parts hanging off it.

    Part ``k`` is a vertex ``pk`` seeing its largest trace, plus one
    simplicial vertex ``pk_j`` seeing ``pk`` and each smaller trace.  The
    result is chordal and ``Q`` is one of its clique separators.
    """
    rng = random.Random(seed)
    q = rng.randint(2, max_q)
    Q = [f"q{i}" for i in range(q)]
    edges = list(combinations(Q, 2))
    vertices = list(Q)
    for k in range(rng.randint(2, max_parts)):
        traces = _random_part_traces(rng, Q)
        hub = f"p{k}"
        vertices.append(hub)
        edges += [(hub, x) for x in traces[0]]
        for j, t in enumerate(traces[1:]):
            leaf = f"p{k}_{j}"
            vertices.append(leaf)
            edges += [(leaf, hub)] + [(leaf, x) for x in t]
    G = SimpleGraph(vertices, edges)
    assert is_chordal(G)[0]
    return G


def random_trace_profile(
    rng: random.Random,
    max_parts: int = 6,
    max_q: int = 5,
    dominated: bool = False,
) -> SeparationProfile:
    """Profile of a random separator whose parts are realizable.

    Each part gets a largest trace (a nonempty proper subset of ``Q``) and a
    few subsets of it, realized as in :func:`random_separator_graph`, so
    every profile drawn here comes from an actual chordal graph.  With
    ``dominated`` one to three parts act as would-be upper bounds and the
    remaining parts draw their traces inside them (or inside the overlap of
    two), which yields far fewer full triples and more coloring conflicts.
    """
    q = rng.randint(3 if dominated else 2, max_q)
    Q = [chr(ord("a") + i) for i in range(q)]
    n_parts = rng.randint(2, max_parts)
    if not dominated:
        return profile_from_traces(Q, [_random_part_traces(rng, Q) for _ in range(n_parts)])
    ups = [frozenset(rng.sample(Q, rng.randint(2, q - 1))) for _ in range(min(n_parts, rng.randint(1, 3)))]
    traces = [[u] for u in ups]
    while len(traces) < n_parts:
        pool = rng.choice(ups)
        if len(ups) > 1 and rng.random() < 0.4:
            pool = (pool & rng.choice(ups)) or pool
        traces.append(_random_part_traces(rng, Q, pool))
    return profile_from_traces(Q, traces)


def template_traces(family: str, param: int) -> tuple[list[str], dict[str, frozenset[str]]]:
    """A separator ``Q`` and one trace per template vertex realizing a template.

    Consecutive rim or path parts share one vertex ``e*`` of ``Q``; hubs
    get a trace covering the parts they dominate.  The vertex ``z`` keeps
    every trace a proper subset of ``Q``.
    """
    from .templates import make_template

    make_template(family, param)  # validates the parameter
    e = lambda i: f"e{i}"  # noqa: E731
    tr: dict[str, frozenset[str]] = {}
    if family in ("W0", "W1"):
        m = 2 * param + 1
        for i in range(m):
            tr[f"r{i}"] = frozenset({e((i - 1) % m), e(i)})
        tr["h"] = frozenset(e(i) for i in range(m))
        if family == "W1":
            tr["r0"] |= {"w"}
    elif family in ("F", "Ftilde"):
        m = 2 * param
        for i in range(m):
            tr[f"p{i}"] = frozenset({e(i), e(i + 1)})
        if family == "Ftilde":
            tr[f"p{m - 1}"] = frozenset({e(m - 1), e(0)})
        tr["h"] = frozenset(e(i) for i in range(1, m))
    else:
        m = 2 * param - 1
        for i in range(m):
            tr[f"p{i}"] = frozenset({e(i), e(i + 1)})
        tr["h1"] = frozenset(e(i) for i in range(m))
        tr["h2"] = frozenset(e(i) for i in range(1, m + 1))
    Q = sorted(frozenset().union(*tr.values()) | {"z"})
    return Q, tr


def template_graph(family: str, param: int) -> SimpleGraph:
    """Chordal graph whose attachedness graph at ``Q`` is exactly the template.

    Each template vertex ``t`` becomes a vertex ``x_t`` adjacent to its trace.
    """
    Q, tr = template_traces(family, param)
    edges = list(combinations(Q, 2))
    edges += [(f"x_{t}", q) for t, trace in tr.items() for q in trace]
    G = SimpleGraph(Q + [f"x_{t}" for t in tr], edges)
    assert is_chordal(G)[0]
    return G
