"""Two-edge-colored obstruction templates and colored subgraph search.

Edges of an attachedness graph are either antipodal or dominance edges.  The
five obstruction families are realized here as small colored graphs:

``W0`` (k)
    antipodal odd rim ``r0 .. r2k``, hub ``h`` with dominance spokes.
``W1`` (k)
    as ``W0`` but the spoke ``h r0`` is antipodal.
``F`` (n)
    antipodal path ``p0 .. p(2n-1)``; hub antipodal to both ends, dominance
    to the interior.
``Ftilde`` (n)
    ``F`` plus the antipodal edge closing the path into an even cycle.
``DF`` (n)
    antipodal path ``p0 .. p(2n-2)`` and two antipodal hubs; ``h1`` is
    antipodal to the last path vertex and ``h2`` to the first, every other
    spoke is a dominance edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

import networkx as nx
from networkx.algorithms import isomorphism

from .separation import SeparationProfile, abstract_profile

__all__ = [
    "ANTIPODAL",
    "DOMINANCE",
    "FAMILIES",
    "FAMILIES_SUBGRAPH",
    "ColoredGraph",
    "ForbiddenMatch",
    "Template",
    "attachedness_graph",
    "find_forbidden",
    "flip_edge",
    "make_template",
    "template_as_profile",
    "templates_up_to",
]

ANTIPODAL = "antipodal"
DOMINANCE = "dominance"

FAMILIES = ("W0", "W1", "F", "Ftilde", "DF")
FAMILIES_SUBGRAPH = ("W0", "W1", "F")
_MIN_PARAM = {"W0": 1, "W1": 1, "F": 2, "Ftilde": 2, "DF": 2}


@dataclass(frozen=True)
class ColoredGraph:
    vertices: tuple
    edges: dict  # frozenset({u, v}) -> ANTIPODAL | DOMINANCE

    def color(self, u, v) -> str | None:
        return self.edges.get(frozenset((u, v)))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for e, c in self.edges.items():
            u, v = tuple(e)
            g.add_edge(u, v, color=c)
        return g

    def shadow_edges(self) -> set[frozenset]:
        return set(self.edges)

    def key(self) -> tuple:
        """Structural key after relabeling vertices by position."""
        pos = {v: k for k, v in enumerate(self.vertices)}
        return (
            len(self.vertices),
            tuple(sorted((min(pos[u] for u in e), max(pos[u] for u in e), c) for e, c in self.edges.items())),
        )

    def to_dot(self, name: str = "colored") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e, c in sorted(self.edges.items(), key=lambda item: sorted(map(str, item[0]))):
            u, v = sorted(e, key=str)
            style = "solid" if c == ANTIPODAL else "dotted"
            lines.append(f'  "{u}" -- "{v}" [style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Template:
    family: str
    param: int
    graph: ColoredGraph

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self.graph.vertices)

    @property
    def name(self) -> str:
        return f"{self.family}_{self.order - 1 if self.family.startswith('W') else self.order}"


def _add(edges: dict, u, v, color: str) -> None:
    edges[frozenset((u, v))] = color


def make_template(family: str, param: int) -> Template:
    """Build a template; ``param`` is ``k`` for wheels and ``n`` otherwise."""
    if family not in _MIN_PARAM:
        raise ValueError(f"unknown family {family!r}")
    if param < _MIN_PARAM[family]:
        raise ValueError(f"{family} needs parameter >= {_MIN_PARAM[family]}, got {param}")
    edges: dict = {}
    if family in ("W0", "W1"):
        rim = [f"r{i}" for i in range(2 * param + 1)]
        for i, r in enumerate(rim):
            _add(edges, r, rim[(i + 1) % len(rim)], ANTIPODAL)
            _add(edges, "h", r, DOMINANCE)
        if family == "W1":
            _add(edges, "h", rim[0], ANTIPODAL)
        vertices = ("h", *rim)
    elif family in ("F", "Ftilde"):
        path = [f"p{i}" for i in range(2 * param)]
        for a, b in zip(path, path[1:]):
            _add(edges, a, b, ANTIPODAL)
        for i, p in enumerate(path):
            _add(edges, "h", p, ANTIPODAL if i in (0, len(path) - 1) else DOMINANCE)
        if family == "Ftilde":
            _add(edges, path[0], path[-1], ANTIPODAL)
        vertices = ("h", *path)
    else:
        path = [f"p{i}" for i in range(2 * param - 1)]
        for a, b in zip(path, path[1:]):
            _add(edges, a, b, ANTIPODAL)
        _add(edges, "h1", "h2", ANTIPODAL)
        last = len(path) - 1
        for i, p in enumerate(path):
            _add(edges, "h1", p, ANTIPODAL if i == last else DOMINANCE)
            _add(edges, "h2", p, ANTIPODAL if i == 0 else DOMINANCE)
        vertices = ("h1", "h2", *path)
    return Template(family, param, ColoredGraph(vertices, edges))


def flip_edge(template: Template, u, v) -> Template:
    """Copy of ``template`` with the color of edge ``uv`` swapped (mutation testing)."""
    e = frozenset((u, v))
    if e not in template.graph.edges:
        raise KeyError(f"{u}{v} is not an edge of {template.name}")
    edges = dict(template.graph.edges)
    edges[e] = DOMINANCE if edges[e] == ANTIPODAL else ANTIPODAL
    return Template(template.family, template.param, ColoredGraph(template.graph.vertices, edges))


def templates_up_to(
    max_vertices: int,
    families: Iterable[str] = FAMILIES,
    make: Callable[[str, int], Template] = make_template,
) -> Iterator[Template]:
    """All templates of the given families with at most ``max_vertices`` vertices, smallest first.

    ``make`` builds one member; swapping it lets mutation tests plant a
    corrupted family.
    """
    out = []
    for fam in families:
        param = _MIN_PARAM[fam]
        while True:
            t = make(fam, param)
            if t.order > max_vertices:
                break
            out.append(t)
            param += 1
    out.sort(key=lambda t: (t.order, FAMILIES.index(t.family)))
    return iter(out)


def attachedness_graph(profile: SeparationProfile) -> ColoredGraph:
    edges = {e: ANTIPODAL for e in profile.antipodal}
    edges.update({e: DOMINANCE for e in profile.dominance_edges()})
    return ColoredGraph(tuple(profile.part_ids), edges)


def template_as_profile(template: Template) -> SeparationProfile:
    """Read a template as an abstract profile.

    Every triangle with at least one dominance edge becomes a neighboring
    triple; purely antipodal triangles stay empty.  Dominance edges are
    oriented arbitrarily (low to high index); only their presence matters to
    strong colorability.
    """
    g = template.graph
    idx = {v: k for k, v in enumerate(g.vertices)}
    anti = [(idx[u], idx[v]) for e, c in g.edges.items() if c == ANTIPODAL for u, v in [tuple(e)]]
    neighboring = {}
    for a, b, c in combinations(g.vertices, 3):
        cols = [g.color(a, b), g.color(a, c), g.color(b, c)]
        if None not in cols and DOMINANCE in cols:
            neighboring[f"{a}{b}{c}"] = [idx[a], idx[b], idx[c]]
    prof = abstract_profile(range(len(g.vertices)), antipodal=anti, neighboring=neighboring)
    dom = frozenset(
        (min(idx[u], idx[v]), max(idx[u], idx[v])) for e, c in g.edges.items() if c == DOMINANCE for u, v in [tuple(e)]
    )
    return SeparationProfile(prof.part_ids, prof.antipodal, dom, prof.neighboring)


@dataclass(frozen=True)
class ForbiddenMatch:
    """``family`` is a template family or ``"full_triangle"``."""

    family: str
    param: int
    embedding: dict  # template vertex -> host vertex
    induced: bool


def _edge_match(a, b) -> bool:
    return a["color"] == b["color"]


def find_forbidden(
    colored: ColoredGraph,
    families: Iterable[str] = FAMILIES_SUBGRAPH,
    induced: bool = False,
    is_full: Callable[[tuple], bool] | None = None,
    max_vertices: int = 12,
    make: Callable[[str, int], Template] = make_template,
) -> ForbiddenMatch | None:
    """Search ``colored`` for a member of ``families``.

    With ``induced`` the copy must be an induced colored subgraph, otherwise
    any colored subgraph counts.  When ``is_full`` is given, antipodal
    triangles it accepts are reported first as ``full_triangle``.
    """
    n = len(colored.vertices)
    if n > max_vertices:
        raise ValueError(f"{n} vertices exceed the search cap of {max_vertices}")
    if is_full is not None:
        for a, b, c in combinations(colored.vertices, 3):
            if all(colored.color(x, y) == ANTIPODAL for x, y in ((a, b), (a, c), (b, c))) and is_full((a, b, c)):
                return ForbiddenMatch("full_triangle", 1, {"t0": a, "t1": b, "t2": c}, induced)
    families = tuple(families)
    if not families:
        return None
    host = colored.to_networkx()
    for t in templates_up_to(n, families, make):
        if len(t.graph.edges) > len(colored.edges):
            continue
        gm = isomorphism.GraphMatcher(host, t.graph.to_networkx(), edge_match=_edge_match)
        matches = gm.subgraph_isomorphisms_iter() if induced else gm.subgraph_monomorphisms_iter()
        for mapping in matches:
            return ForbiddenMatch(t.family, t.param, {tv: hv for hv, tv in mapping.items()}, induced)
    return None
