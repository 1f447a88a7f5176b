"""Parts of a clique separator and the attachedness relations between them.

For a clique separator ``Q`` every component ``V_i`` of ``G - Q`` yields a part
``G[V_i | Q]``.  A part only matters through its *traces*: the sets ``K & Q``
for the maximal cliques ``K != Q`` of the part that meet ``Q``.  Attachedness,
dominance and antipodality are all decided on traces.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

from .chordal import maximal_cliques
from .graph import SimpleGraph, connected_components, induced_subgraph

__all__ = [
    "Part",
    "SeparationProfile",
    "SeparatorError",
    "abstract_profile",
    "antipodality_holds",
    "attached",
    "build_profile",
    "dominance_holds",
    "profile_from_traces",
    "quotient_profile",
    "record_profiles",
]

Traces = frozenset  # frozenset[frozenset[str]]

_observers: ContextVar[tuple[Callable, ...]] = ContextVar("_observers", default=())


@contextmanager
def record_profiles(callback: Callable[["SeparationProfile"], None]) -> Iterator[None]:
    """Call ``callback`` on every profile built inside the ``with`` block."""
    token = _observers.set(_observers.get() + (callback,))
    try:
        yield
    finally:
        _observers.reset(token)


def _notify(profile: "SeparationProfile") -> "SeparationProfile":
    for cb in _observers.get():
        cb(profile)
    return profile


class SeparatorError(ValueError):
    pass


@dataclass(frozen=True)
class Part:
    """One member of Gamma_Q (or a class of them after quotienting)."""

    part_id: int
    component: frozenset[str]
    traces: Traces
    members: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.members:
            object.__setattr__(self, "members", (self.part_id,))

    @property
    def support(self) -> frozenset[str]:
        """Union of the traces."""
        return frozenset().union(*self.traces)


def _traces_of(p) -> Traces:
    if isinstance(p, Part):
        return p.traces
    return frozenset(frozenset(t) for t in p)


def attached(p, p2) -> bool:
    ta, tb = _traces_of(p), _traces_of(p2)
    return any(t & s for t in ta for s in tb)


def dominance_holds(p, p2) -> bool:
    """Whether ``p <= p2``.

    ``p`` and ``p2`` are attached and every trace of ``p2`` either contains
    all traces of ``p`` or meets none of them.
    """
    ta, tb = _traces_of(p), _traces_of(p2)
    if not attached(ta, tb):
        return False
    return all(all(t <= s for t in ta) or all(not (t & s) for t in ta) for s in tb)


def antipodality_holds(p, p2) -> bool:
    """Whether some pair of traces meets while being incomparable."""
    ta, tb = _traces_of(p), _traces_of(p2)
    return any(t & s and not t <= s and not s <= t for t in ta for s in tb)


def _pair(a: int, b: int) -> frozenset[int]:
    return frozenset((a, b))


@dataclass(frozen=True, eq=False)
class SeparationProfile:
    """Relational view of Gamma_Q.

    ``dominance`` holds strict pairs ``(a, b)`` meaning ``a <= b``; reflexive
    pairs are implicit.  ``neighboring`` maps a witness (a vertex of Q for
    profiles built from graphs) to the parts having a trace through it.
    ``parts`` and ``separator`` are empty for hand-built abstract profiles.
    """

    part_ids: tuple[int, ...]
    antipodal: frozenset[frozenset[int]]
    dominance: frozenset[tuple[int, int]]
    neighboring: Mapping[str, frozenset[int]]
    separator: frozenset[str] = frozenset()
    parts: tuple[Part, ...] = ()
    # antipodal pairs that have no incomparable pair of meeting traces
    witnessless: frozenset[frozenset[int]] = frozenset()
    _up: dict = field(default_factory=dict, repr=False)
    _anti: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        up = {p: set() for p in self.part_ids}
        for a, b in self.dominance:
            up[a].add(b)
        anti = {p: set() for p in self.part_ids}
        for e in self.antipodal:
            a, b = tuple(e)
            anti[a].add(b)
            anti[b].add(a)
        self._up.update({p: frozenset(s) for p, s in up.items()})
        self._anti.update({p: frozenset(s) for p, s in anti.items()})

    def __len__(self) -> int:
        return len(self.part_ids)

    def leq(self, a: int, b: int) -> bool:
        return a == b or b in self._up[a]

    def comparable(self, a: int, b: int) -> bool:
        return a != b and (b in self._up[a] or a in self._up[b])

    def is_antipodal(self, a: int, b: int) -> bool:
        return b in self._anti[a]

    def is_attached(self, a: int, b: int) -> bool:
        return self.is_antipodal(a, b) or self.comparable(a, b)

    def dominators(self, a: int) -> frozenset[int]:
        """Parts strictly above ``a``."""
        return self._up[a]

    def antipodal_neighbors(self, a: int) -> frozenset[int]:
        return self._anti[a]

    def part(self, part_id: int) -> Part:
        for p in self.parts:
            if p.part_id == part_id:
                return p
        raise KeyError(part_id)

    def neighboring_sets(self) -> list[tuple[str, frozenset[int]]]:
        return sorted(self.neighboring.items())

    def are_neighboring(self, ids: Iterable[int]) -> str | None:
        """A witness through which all ``ids`` are neighboring, else None."""
        need = frozenset(ids)
        for w, members in self.neighboring_sets():
            if need <= members:
                return w
        return None

    def dominance_edges(self) -> frozenset[frozenset[int]]:
        return frozenset(_pair(a, b) for a, b in self.dominance)

    def attachedness_edges(self) -> frozenset[frozenset[int]]:
        return self.antipodal | self.dominance_edges()

    def to_dot(self, name: str = "attachedness") -> str:
        """Solid lines for antipodality, dotted arrows from dominated to dominator."""
        lines = [f"digraph {name} {{", "  node [shape=box];"]
        for pid in self.part_ids:
            if self.parts:
                traces = " ".join("{" + ",".join(sorted(t)) + "}" for t in sorted(self.part(pid).traces, key=sorted))
                label = f"g{pid}\\n{traces}"
            else:
                label = f"g{pid}"
            lines.append(f'  p{pid} [label="{label}"];')
        for e in sorted(tuple(sorted(e)) for e in self.antipodal):
            lines.append(f"  p{e[0]} -> p{e[1]} [dir=none, style=solid];")
        for a, b in sorted(self.dominance):
            lines.append(f"  p{a} -> p{b} [style=dotted];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        out = {
            "separator": sorted(self.separator),
            "parts": [
                {
                    "id": p.part_id,
                    "members": list(p.members),
                    "component": sorted(p.component),
                    "traces": sorted(sorted(t) for t in p.traces),
                }
                for p in self.parts
            ],
            "antipodal": sorted(sorted(e) for e in self.antipodal),
            "dominance": sorted(list(d) for d in self.dominance),
            "neighboring": {w: sorted(s) for w, s in self.neighboring_sets()},
        }
        if not self.parts:
            out["part_ids"] = list(self.part_ids)
        return out


def _transitive_closure(ids: Iterable[int], pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    ids = list(ids)
    up = {p: set() for p in ids}
    for a, b in pairs:
        up[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in ids:
            extra = set().union(*(up[b] for b in up[a])) - up[a] - {a}
            if extra:
                up[a] |= extra
                changed = True
    return {(a, b) for a in ids for b in up[a] if a != b}


def abstract_profile(
    part_ids: Iterable[int],
    antipodal: Iterable[tuple[int, int]] = (),
    dominance: Iterable[tuple[int, int]] = (),
    neighboring: Mapping[str, Iterable[int]] | None = None,
) -> SeparationProfile:
    """Profile from bare relations.  Dominance is closed transitively."""
    ids = tuple(sorted(part_ids))
    return SeparationProfile(
        part_ids=ids,
        antipodal=frozenset(_pair(a, b) for a, b in antipodal),
        dominance=frozenset(_transitive_closure(ids, dominance)),
        neighboring={str(w): frozenset(s) for w, s in (neighboring or {}).items()},
    )


def profile_from_traces(
    separator: Iterable[str],
    traces: Iterable[Iterable[Iterable[str]]],
    components: Iterable[Iterable[str]] | None = None,
    part_ids: Iterable[int] | None = None,
    members: Iterable[tuple[int, ...]] | None = None,
) -> SeparationProfile:
    """Derive all relations from the trace sets of each part.

    Attached pairs that are not comparable under dominance are antipodal.
    """
    Q = frozenset(separator)
    trace_sets = [frozenset(frozenset(t) for t in ts) for ts in traces]
    n = len(trace_sets)
    ids = list(part_ids) if part_ids is not None else list(range(1, n + 1))
    comps = [frozenset(c) for c in components] if components is not None else [frozenset()] * n
    mems = list(members) if members is not None else [()] * n
    parts = tuple(Part(ids[k], comps[k], trace_sets[k], tuple(mems[k])) for k in range(n))

    antipodal, witnessless, dominance = set(), set(), set()
    for x, y in combinations(range(n), 2):
        ta, tb = trace_sets[x], trace_sets[y]
        if not attached(ta, tb):
            continue
        a, b = ids[x], ids[y]
        le, ge = dominance_holds(ta, tb), dominance_holds(tb, ta)
        if le:
            dominance.add((a, b))
        if ge:
            dominance.add((b, a))
        if not (le or ge):
            antipodal.add(_pair(a, b))
            if not antipodality_holds(ta, tb):
                witnessless.add(_pair(a, b))
    neighboring = {}
    for v in sorted(Q):
        around = frozenset(ids[k] for k in range(n) if any(v in t for t in trace_sets[k]))
        if around:
            neighboring[v] = around
    profile = SeparationProfile(
        part_ids=tuple(ids),
        antipodal=frozenset(antipodal),
        dominance=frozenset(dominance),
        neighboring=neighboring,
        separator=Q,
        parts=parts,
        witnessless=frozenset(witnessless),
    )
    return _notify(profile)


def build_profile(
    G: SimpleGraph,
    Q: Iterable[str],
    cliques: list[frozenset[str]] | None = None,
) -> SeparationProfile:
    """Profile of the clique separator ``Q`` of the chordal graph ``G``.

    ``cliques`` may pass the maximal cliques of ``G`` to skip recomputing the
    cliques of each part.
    """
    Q = frozenset(Q)
    if not Q or not Q <= set(G.vertices):
        raise SeparatorError(f"{sorted(Q)} is not a vertex subset of G")
    if not G.is_clique(Q):
        raise SeparatorError(f"{sorted(Q)} is not a clique")
    comps = connected_components(G, removed=Q)
    if len(comps) < 2:
        raise SeparatorError(f"{sorted(Q)} does not separate G")

    traces: list[set[frozenset[str]]] = [set() for _ in comps]
    if cliques is not None and Q in cliques:
        # Q maximal: the cliques of a part are the cliques of G inside it
        where = {v: k for k, c in enumerate(comps) for v in c}
        for K in cliques:
            if K == Q:
                continue
            t = K & Q
            if t:
                traces[where[next(iter(K - Q))]].add(t)
    else:
        for k, comp in enumerate(comps):
            for K in maximal_cliques(induced_subgraph(G, comp | Q)):
                t = K & Q
                if t and K != Q:
                    traces[k].add(t)
    return profile_from_traces(Q, traces, comps)


def quotient_profile(profile: SeparationProfile) -> SeparationProfile:
    """Merge mutually dominant parts.  Classes keep their smallest id."""
    rep = {p: p for p in profile.part_ids}
    for a, b in profile.dominance:
        if (b, a) in profile.dominance:
            ra, rb = rep[a], rep[b]
            keep, drop = min(ra, rb), max(ra, rb)
            for p, r in rep.items():
                if r == drop:
                    rep[p] = keep
    classes = sorted(set(rep.values()))
    if len(classes) == len(profile.part_ids):
        return profile

    if profile.parts:
        by_id = {p.part_id: p for p in profile.parts}
        grouped = {c: [by_id[p] for p in profile.part_ids if rep[p] == c] for c in classes}
        return profile_from_traces(
            profile.separator,
            [frozenset().union(*(p.traces for p in grouped[c])) for c in classes],
            [frozenset().union(*(p.component for p in grouped[c])) for c in classes],
            part_ids=classes,
            members=[tuple(sorted(m for p in grouped[c] for m in p.members)) for c in classes],
        )

    antipodal = {_pair(rep[a], rep[b]) for a, b in map(tuple, profile.antipodal)}
    dominance = {(rep[a], rep[b]) for a, b in profile.dominance if rep[a] != rep[b]}
    neighboring = {w: frozenset(rep[p] for p in s) for w, s in profile.neighboring.items()}
    return SeparationProfile(
        part_ids=tuple(classes),
        antipodal=frozenset(antipodal),
        dominance=frozenset(dominance),
        neighboring=neighboring,
        separator=profile.separator,
    )
