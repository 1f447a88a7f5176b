"""Path-graph recognition by weak colorings, with certificates.

A chordal graph is a path graph iff, at every clique separator, the parts
have no full antipodal triple and admit a weak coloring.  When a separator
fails, the conflict is turned into a full antipodal triple or an embedded
colored template that can be re-checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chordal import clique_separators, is_chordal, maximal_cliques
from .coloring import (
    DPartition,
    PartialColoringConflict,
    TripleWitness,
    TwoColoringConflict,
    WeakColoring,
    d_partition,
    find_full_antipodal_triple,
    partial_coloring,
    weak_coloring,
)
from .graph import SimpleGraph, connected_components, induced_subgraph
from .oracle import CliqueCapError, PathRealization, oracle_is_path_graph
from .separation import SeparationProfile, build_profile, quotient_profile
from .templates import (
    ANTIPODAL,
    DOMINANCE,
    FAMILIES,
    FAMILIES_SUBGRAPH,
    ForbiddenMatch,
    attachedness_graph,
    find_forbidden,
    make_template,
)

__all__ = [
    "NOT_CHORDAL",
    "NOT_PATH_GRAPH",
    "PATH_GRAPH",
    "PartCapExceeded",
    "ForbiddenWitness",
    "SeparatorResult",
    "Verdict",
    "extract_certificate",
    "forbidden_statement",
    "g_plus",
    "recognize",
    "separator_results",
    "verify_certificate",
]

PATH_GRAPH = "path_graph"
NOT_PATH_GRAPH = "not_path_graph"
NOT_CHORDAL = "not_chordal"


@dataclass(frozen=True)
class ForbiddenWitness:
    """Negative certificate at one separator.

    ``kind`` is ``"full_triple"`` (``triple`` is set) or ``"template"``
    (``family``/``param``/``embedding`` are set; the embedding maps template
    vertices to quotient part ids).
    """

    separator: frozenset[str]
    kind: str
    triple: TripleWitness | None = None
    family: str | None = None
    param: int | None = None
    embedding: dict[str, int] = field(default_factory=dict)
    induced: bool = False

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "separator": sorted(self.separator)}
        if self.triple is not None:
            out["parts"] = list(self.triple.parts)
            out["witness_vertex"] = self.triple.witness_vertex
        else:
            out.update(family=self.family, param=self.param, induced=self.induced,
                       embedding=dict(sorted(self.embedding.items())))
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ForbiddenWitness":
        sep = frozenset(data["separator"])
        if data["kind"] == "full_triple":
            return cls(sep, "full_triple", TripleWitness(tuple(data["parts"]), data["witness_vertex"]))
        return cls(sep, "template", family=data["family"], param=data["param"],
                   embedding={k: int(v) for k, v in data["embedding"].items()},
                   induced=data.get("induced", False))


@dataclass(frozen=True)
class SeparatorResult:
    separator: frozenset[str]
    profile: SeparationProfile  # quotiented
    partition: DPartition | None
    coloring: WeakColoring | None
    witness: ForbiddenWitness | None

    @property
    def ok(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class Verdict:
    kind: str
    hole: tuple[str, ...] | None = None
    separators: tuple[SeparatorResult, ...] = ()
    witness: ForbiddenWitness | None = None
    path_tree: PathRealization | None = None

    @property
    def is_path_graph(self) -> bool:
        return self.kind == PATH_GRAPH

    @property
    def failing(self) -> SeparatorResult | None:
        for r in self.separators:
            if not r.ok:
                return r
        return None

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.hole is not None:
            out["hole"] = list(self.hole)
        if self.witness is not None:
            out["separator"] = sorted(self.witness.separator)
            out["certificate"] = self.witness.to_dict()
        if self.kind == PATH_GRAPH:
            out["separators"] = [
                {"separator": sorted(r.separator), "coloring": r.coloring.to_dict()} for r in self.separators
            ]
            if self.path_tree is not None:
                out["clique_path_tree"] = self.path_tree.host_tree.to_dict()
        return out


def _plus_label(v: str, taken: set[str]) -> str:
    label = v + "+"
    while label in taken:
        label += "+"
    return label


def g_plus(G: SimpleGraph) -> SimpleGraph:
    """Attach one new pendant vertex ``v+`` to every vertex ``v``."""
    taken = set(G.vertices)
    edges = list(G.edges())
    for v in G.vertices:
        w = _plus_label(v, taken)
        taken.add(w)
        edges.append((v, w))
    return SimpleGraph(taken, edges)


def extract_certificate(profile: SeparationProfile, dp: DPartition | None, conflict) -> ForbiddenWitness:
    """Turn a triple or a coloring conflict into a checkable witness."""
    Q = profile.separator
    if isinstance(conflict, TripleWitness):
        return ForbiddenWitness(Q, "full_triple", triple=conflict)

    if isinstance(conflict, PartialColoringConflict):
        g, left, right = conflict.part, conflict.left, conflict.right
        ui, uj = dp.upper(conflict.i), dp.upper(conflict.j)
        if profile.is_antipodal(left, right):
            # W1_3: rim right-g-left, hub u_i antipodal to right only
            return ForbiddenWitness(Q, "template", family="W1", param=1,
                                    embedding={"h": ui, "r0": right, "r1": g, "r2": left})
        return ForbiddenWitness(Q, "template", family="DF", param=2,
                                embedding={"h1": ui, "h2": uj, "p0": left, "p1": g, "p2": right})

    if not isinstance(conflict, TwoColoringConflict):
        raise TypeError(f"unsupported conflict {conflict!r}")
    block, parts = conflict.block, list(conflict.parts)
    hub_index = block[0]
    if conflict.kind == "odd_cycle":
        k = (len(parts) - 1) // 2
        emb = {"h": dp.upper(hub_index)}
        emb.update({f"r{t}": p for t, p in enumerate(parts)})
        return ForbiddenWitness(Q, "template", family="W0", param=k, embedding=emb)

    members = dict(dp.blocks())[block]
    first, last = parts[0], parts[-1]
    if conflict.kind == "even_path":
        color = conflict.forced[first]
        if len(block) == 1:
            hub = dp.upper(block[0])
            source = frozenset(profile.part_ids) - members
        else:
            i, j = block
            # forced to i by a neighbor in D_j, to j by a neighbor in D_i
            hub = dp.upper(i if color == i else j)
            source = dp.singles[j] if color == i else dp.singles[i]

        def pool(p):
            # attachers antipodal to the hub first
            return sorted(profile.antipodal_neighbors(p) & source, key=lambda x: (not profile.is_antipodal(hub, x), x))

        a_first, a_last = pool(first), pool(last)
        common = [x for x in a_first if x in a_last]
        if common:
            x = common[0]
            emb = {"h": hub, "r0": x}
            emb.update({f"r{t + 1}": p for t, p in enumerate(parts)})
            # an attacher below the hub closes a wheel with all spokes dominance
            family = "W1" if profile.is_antipodal(hub, x) else "W0"
            return ForbiddenWitness(Q, "template", family=family, param=len(parts) // 2, embedding=emb)
        x, y = a_first[0], a_last[0]
        if profile.is_antipodal(hub, x) and profile.is_antipodal(hub, y):
            path = [x, *parts, y]
            family = "Ftilde" if profile.is_antipodal(x, y) else "F"
            emb = {"h": hub}
            emb.update({f"p{t}": p for t, p in enumerate(path)})
            return ForbiddenWitness(Q, "template", family=family, param=len(path) // 2, embedding=emb)
        return _search_certificate(profile, [hub, x, y, *parts])

    # odd path inside D_{i,j}: ends forced to different colors
    i, j = block
    if conflict.forced[first] != i:
        parts.reverse()
        first, last = last, first
    a = sorted(profile.antipodal_neighbors(first) & dp.singles[j])[0]
    b = sorted(profile.antipodal_neighbors(last) & dp.singles[i])[0]
    rim = [b, *reversed(parts), a]
    emb = {"h1": dp.upper(i), "h2": dp.upper(j)}
    emb.update({f"p{t}": p for t, p in enumerate(rim)})
    return ForbiddenWitness(Q, "template", family="DF", param=(len(rim) + 1) // 2, embedding=emb)


def _search_certificate(profile: SeparationProfile, focus: list[int]) -> ForbiddenWitness:
    """Fallback: colored subgraph search, first near ``focus``, then everywhere.

    Used when the attachers of an even path sit below the hub, where the
    constructive shapes do not apply directly.
    """
    colored = attachedness_graph(profile)
    around = set(focus)
    for p in focus:
        around |= profile.antipodal_neighbors(p) | profile.dominators(p)
    for scope in (sorted(around), list(profile.part_ids)):
        keep = set(scope)
        sub = type(colored)(tuple(scope), {e: c for e, c in colored.edges.items() if e <= keep})
        m = find_forbidden(sub, FAMILIES_SUBGRAPH, induced=False, max_vertices=max(len(scope), 12))
        if m is not None:
            return ForbiddenWitness(profile.separator, "template", family=m.family, param=m.param,
                                    embedding=dict(m.embedding))
    raise AssertionError("no obstruction found for a failed weak coloring")


def verify_certificate(profile: SeparationProfile, w: ForbiddenWitness) -> bool:
    """Re-check a witness against the profile it refers to."""
    ids = set(profile.part_ids)
    if w.kind == "full_triple":
        if w.triple is None:
            return False
        a, b, c = w.triple.parts
        if len({a, b, c}) != 3 or not {a, b, c} <= ids:
            return False
        if not (profile.is_antipodal(a, b) and profile.is_antipodal(a, c) and profile.is_antipodal(b, c)):
            return False
        return {a, b, c} <= profile.neighboring.get(w.triple.witness_vertex, frozenset())
    if w.kind != "template" or not w.embedding:
        return False
    try:
        t = make_template(w.family, w.param)
    except ValueError:
        return False
    emb = w.embedding
    if set(emb) != set(t.graph.vertices) or len(set(emb.values())) != len(emb) or not set(emb.values()) <= ids:
        return False
    verts = t.graph.vertices
    for x in range(len(verts)):
        for y in range(x + 1, len(verts)):
            color = t.graph.color(verts[x], verts[y])
            a, b = emb[verts[x]], emb[verts[y]]
            if color == ANTIPODAL and not profile.is_antipodal(a, b):
                return False
            if color == DOMINANCE and not profile.comparable(a, b):
                return False
            if color is None and w.induced and profile.is_attached(a, b):
                return False
    return True


def _check_separator(G: SimpleGraph, Q: frozenset[str], cliques) -> SeparatorResult:
    profile = quotient_profile(build_profile(G, Q, cliques))
    triple = find_full_antipodal_triple(profile)
    if triple is not None:
        return SeparatorResult(Q, profile, None, None, extract_certificate(profile, None, triple))
    dp = d_partition(profile)
    try:
        pc = partial_coloring(profile, dp)
        coloring = weak_coloring(profile, dp, pc)
    except (PartialColoringConflict, TwoColoringConflict) as conflict:
        w = extract_certificate(profile, dp, conflict)
        assert verify_certificate(profile, w), (w, conflict)
        return SeparatorResult(Q, profile, dp, None, w)
    return SeparatorResult(Q, profile, dp, coloring, None)


def separator_results(G: SimpleGraph, stop_at_first: bool = True) -> tuple[SeparatorResult, ...] | None:
    """Per-separator results for a chordal ``G``, component by component."""
    results = []
    for comp in connected_components(G):
        H = G if len(comp) == len(G) else induced_subgraph(G, comp)
        cliques = maximal_cliques(H)
        for Q in clique_separators(H, cliques):
            r = _check_separator(H, Q, cliques)
            results.append(r)
            if stop_at_first and not r.ok:
                return tuple(results)
    return tuple(results)


def recognize(G: SimpleGraph, path_tree: bool = False, max_oracle_cliques: int = 9) -> Verdict:
    """Decide whether ``G`` is a path graph.

    With ``path_tree`` a clique path tree is attached to positive verdicts
    when the brute-force oracle can afford it (at most
    ``max_oracle_cliques`` cliques).
    """
    chordal, hole = is_chordal(G)
    if not chordal:
        return Verdict(NOT_CHORDAL, hole=tuple(hole))
    results = separator_results(G)
    bad = next((r for r in results if not r.ok), None)
    if bad is not None:
        return Verdict(NOT_PATH_GRAPH, separators=results, witness=bad.witness)
    realization = None
    if path_tree:
        try:
            realization = oracle_is_path_graph(G, max_cliques=max_oracle_cliques).realization
        except CliqueCapError:
            realization = None
    return Verdict(PATH_GRAPH, separators=results, path_tree=realization)


class PartCapExceeded(ValueError):
    pass


def forbidden_statement(G: SimpleGraph, plus: bool, max_parts: int = 12, make=make_template) -> ForbiddenMatch | None:
    """Search the separators of a chordal ``G`` for colored obstructions.

    ``plus=False``: full antipodal triangles and members of the subgraph
    families, looked up as plain subgraphs of the attachedness graphs of
    ``G``.  ``plus=True``: induced members of all five families in the
    attachedness graphs of ``G+``, at the same separators.  Returns the first
    match, or None when ``G`` passes.  Raises :class:`PartCapExceeded` when
    some quotiented profile of ``G`` has more than ``max_parts`` parts.
    """
    for comp in connected_components(G):
        H = G if len(comp) == len(G) else induced_subgraph(G, comp)
        cliques = maximal_cliques(H)
        seps = clique_separators(H, cliques)
        if plus and seps:
            H = g_plus(H)
            cliques = maximal_cliques(H)
        for Q in seps:
            profile = quotient_profile(build_profile(H, Q, cliques))
            # in G+ every vertex of Q adds a pendant part; the cap counts G's parts
            extra = len(Q) if plus else 0
            if len(profile.part_ids) > max_parts + extra:
                raise PartCapExceeded(f"{len(profile.part_ids) - extra} parts at {sorted(Q)}")
            colored = attachedness_graph(profile)
            if plus:
                match = find_forbidden(colored, FAMILIES, induced=True, max_vertices=max_parts + extra, make=make)
            else:
                full = lambda t, p=profile: p.are_neighboring(t) is not None  # noqa: E731
                match = find_forbidden(colored, FAMILIES_SUBGRAPH, induced=False, is_full=full,
                                       max_vertices=max_parts, make=make)
            if match is not None:
                return match
    return None
