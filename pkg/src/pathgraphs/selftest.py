"""The eight acceptance suites, runnable from the CLI and from pytest.

Each suite returns a :class:`SuiteResult`.  Suites 5 and 6 reuse the graphs
drawn for suite 3, and suite 7 checks every profile built while suites 1-6
ran.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .chordal import clique_separators, is_chordal, maximal_cliques, verify_clique_path_tree
from .coloring import (
    PartialColoringConflict,
    TooManyUppersError,
    TwoColoringConflict,
    d_partition,
    find_full_antipodal_triple,
    partial_coloring,
    strong_coloring_bruteforce,
    validate_weak_coloring,
    weak_coloring,
)
from .generators import (
    all_labeled_graphs,
    random_separator_graph,
    random_subtree_graph,
    random_trace_profile,
    template_graph,
    template_traces,
)
from .graph import SimpleGraph, connected_components, parse_edge_list
from .oracle import oracle_is_path_graph
from .recognizer import (
    NOT_PATH_GRAPH,
    PATH_GRAPH,
    PartCapExceeded,
    forbidden_statement,
    g_plus,
    recognize,
    verify_certificate,
)
from .separation import SeparationProfile, attached, build_profile, quotient_profile, record_profiles
from .templates import (
    FAMILIES,
    FAMILIES_SUBGRAPH,
    attachedness_graph,
    find_forbidden,
    flip_edge,
    make_template,
    template_as_profile,
)

__all__ = [
    "FIGURE1_EDGES",
    "G2_EDGES",
    "SelftestConfig",
    "SuiteResult",
    "run_all",
]

log = logging.getLogger(__name__)

FIGURE1_EDGES = "ab ac bc cd ce de be bg eg bf fg eh gh"
G2_EDGES = "x-y1 x-y2 x-y3 y1-y2 y1-y3 y2-y3 b1-x b1-y1 b2-x b2-y2 b3-x b3-y3"
TEMPLATE_MAX = {"W0": 4, "W1": 4, "F": 5, "Ftilde": 5, "DF": 5}


def figure1_graph() -> SimpleGraph:
    return parse_edge_list("\n".join(f"{e[0]} {e[1]}" for e in FIGURE1_EDGES.split()))


def g2_graph() -> SimpleGraph:
    return parse_edge_list("\n".join(e.replace("-", " ") for e in G2_EDGES.split()))


@dataclass
class SelftestConfig:
    max_n: int = 6  # exhaustive labeled graphs on this many vertices
    samples: int = 10_000  # subtree-model graphs for the differential suite
    profiles: int = 2_000  # random profiles for the coloring equivalence
    forbidden_samples: int = 3_000  # suite-3 graphs re-checked by colored search
    plus_samples: int = 1_500
    max_cliques: int = 9
    max_parts: int = 12
    seed: int = 0


@dataclass
class SuiteResult:
    number: int
    name: str
    checked: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    limit: float | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and (self.limit is None or self.seconds < self.limit)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" < {self.limit:g}s" if self.limit is not None else ""
        extra = "".join(f", {k}={v}" for k, v in self.notes.items())
        return (f"[{status}] criterion {self.number} {self.name}: {self.checked} checked, "
                f"{len(self.failures)} failures{extra} ({self.seconds:.2f}s{budget})")


def _timed(number: int, name: str, limit: float | None):
    def wrap(fn):
        def run(*args, **kwargs) -> SuiteResult:
            t0 = time.perf_counter()
            res: SuiteResult = fn(*args, **kwargs)
            res.number, res.name, res.limit = number, name, limit
            res.seconds = time.perf_counter() - t0
            return res
        return run
    return wrap


def _fail(res: SuiteResult, msg: str, keep: int = 20) -> None:
    if len(res.failures) < keep:
        res.failures.append(msg)
    else:
        res.notes["unlisted_failures"] = res.notes.get("unlisted_failures", 0) + 1


# -- suite 1 ---------------------------------------------------------------

@_timed(1, "figure-1 pipeline", 1.0)
def suite_figure1() -> SuiteResult:
    res = SuiteResult(1, "", 0)
    G = figure1_graph()
    want = {frozenset(c) for c in "abc cde bce beg bfg egh".split()}
    checks = [
        ("six cliques", set(maximal_cliques(G)) == want and len(maximal_cliques(G)) == 6),
        ("separators", clique_separators(G) == [frozenset("bce"), frozenset("beg")]),
    ]
    v = recognize(G)
    checks.append(("verdict PathGraph", v.kind == PATH_GRAPH))
    for r in v.separators:
        checks.append((f"weak coloring at {sorted(r.separator)}",
                       r.coloring is not None and not validate_weak_coloring(r.profile, r.partition, r.coloring.assignment)))
    o = oracle_is_path_graph(G)
    checks.append(("oracle agrees", o.is_path_graph))
    checks.append(("oracle tree is a clique path tree",
                   o.realization is not None and verify_clique_path_tree(G, o.realization.host_tree)))
    for label, ok in checks:
        res.checked += 1
        if not ok:
            _fail(res, label)
    return res


# -- suite 2 ---------------------------------------------------------------

@_timed(2, "full-triple certificate", 1.0)
def suite_triple() -> SuiteResult:
    res = SuiteResult(2, "", 0)
    G = g2_graph()
    v = recognize(G)
    w = v.witness
    bad = v.failing
    o = oracle_is_path_graph(G, method="prufer")
    checks = [
        ("verdict NotPathGraph", v.kind == NOT_PATH_GRAPH),
        ("full triple witness", w is not None and w.kind == "full_triple"),
        ("witness vertex x", w is not None and w.triple is not None and w.triple.witness_vertex == "x"),
        ("certificate verifies", bad is not None and verify_certificate(bad.profile, w)),
        ("oracle rejects", not o.is_path_graph),
        ("16 candidate trees", o.trees_examined == 16),
    ]
    for label, ok in checks:
        res.checked += 1
        if not ok:
            _fail(res, label)
    return res


# -- suite 3 ---------------------------------------------------------------

def subtree_corpus(count: int, seed: int, max_cliques: int = 9) -> list[tuple[int, SimpleGraph]]:
    """``count`` subtree-model graphs with at most ``max_cliques`` cliques.

    Host size, vertex count and subtree size cycle with the draw index so
    sparse and dense instances both appear.
    """
    out = []
    k = 0
    while len(out) < count:
        s = seed * 1_000_003 + k
        n = 4 + k % 7
        G = random_subtree_graph(n, s, n_vertices=(2 + k % 3) * n, max_subtree=3 + k % 4)
        k += 1
        if len(maximal_cliques(G)) <= max_cliques:
            out.append((s, G))
    return out


@_timed(3, "differential recognize vs oracle", 300.0)
def suite_differential(cfg: SelftestConfig, corpus: list, verdicts: dict) -> SuiteResult:
    res = SuiteResult(3, "", 0)
    exhaustive = negatives = 0
    for G in all_labeled_graphs(cfg.max_n) if cfg.max_n > 0 else ():
        if len(G) == 0 or len(connected_components(G)) != 1 or not is_chordal(G)[0]:
            continue
        exhaustive += 1
        v = recognize(G)
        o = oracle_is_path_graph(G, max_cliques=cfg.max_cliques)
        if v.is_path_graph != o.is_path_graph:
            _fail(res, f"labeled graph {sorted(G.edges())}: recognize={v.kind} oracle={o.is_path_graph}")
    for s, G in corpus:
        v = recognize(G)
        verdicts[s] = v
        o = oracle_is_path_graph(G, max_cliques=cfg.max_cliques)
        negatives += not o.is_path_graph
        if v.is_path_graph != o.is_path_graph:
            _fail(res, f"subtree seed {s}: recognize={v.kind} oracle={o.is_path_graph}")
        elif v.witness is not None and not verify_certificate(v.failing.profile, v.witness):
            _fail(res, f"subtree seed {s}: certificate does not verify")
    res.checked = exhaustive + len(corpus)
    res.notes.update(exhaustive=exhaustive, sampled=len(corpus), non_path=negatives)
    return res


# -- suite 4 ---------------------------------------------------------------

def _weak_side(profile: SeparationProfile) -> bool:
    q = quotient_profile(profile)
    if find_full_antipodal_triple(q) is not None:
        return False
    dp = d_partition(q)
    try:
        f = weak_coloring(q, dp, partial_coloring(q, dp))
    except (PartialColoringConflict, TwoColoringConflict):
        return False
    assert not validate_weak_coloring(q, dp, f.assignment)
    return True


@_timed(4, "strong vs weak colorability", 120.0)
def suite_strong_weak(cfg: SelftestConfig) -> SuiteResult:
    res = SuiteResult(4, "", 0)
    rng = random.Random(cfg.seed + 4)
    colorable = 0
    for k in range(cfg.profiles):
        p = random_trace_profile(rng, max_parts=6, dominated=bool(k % 2))
        strong = strong_coloring_bruteforce(p) is not None
        colorable += strong
        if strong != _weak_side(p):
            _fail(res, f"profile #{k}: strong={strong} {p.to_dict()}")
        res.checked += 1
    res.notes.update(strong_colorable=colorable)
    return res


# -- suite 5 ---------------------------------------------------------------

def _sample(corpus: list, verdicts: dict, count: int) -> list:
    """Every non-path graph of ``corpus`` plus evenly spaced path graphs, ``count`` in all."""
    neg = [item for item in corpus if not verdicts[item[0]].is_path_graph]
    pos = [item for item in corpus if verdicts[item[0]].is_path_graph]
    neg = neg[:count // 2] if len(neg) > count // 2 else neg
    room = max(count - len(neg), 0)
    step = max(len(pos) // room, 1) if room else len(pos) + 1
    return sorted(neg + pos[::step][:room], key=lambda item: item[0])


@_timed(5, "forbidden-subgraph statements", 300.0)
def suite_statements(cfg: SelftestConfig, corpus: list, verdicts: dict) -> SuiteResult:
    res = SuiteResult(5, "", 0)
    skipped = 0
    for s, G in _sample(corpus, verdicts, cfg.forbidden_samples):
        ok = verdicts[s].is_path_graph
        try:
            b = forbidden_statement(G, plus=False, max_parts=cfg.max_parts) is None
            e = forbidden_statement(G, plus=True, max_parts=cfg.max_parts) is None
        except PartCapExceeded:
            skipped += 1
            continue
        res.checked += 1
        if not ok == b == e:
            _fail(res, f"subtree seed {s}: path={ok} statement_b={b} statement_e={e}")
    res.notes.update(skipped_over_cap=skipped)
    return res


# -- suite 6 ---------------------------------------------------------------

@_timed(6, "G+ invariance", None)
def suite_gplus(cfg: SelftestConfig, corpus: list, verdicts: dict) -> SuiteResult:
    res = SuiteResult(6, "", 0)
    for s, G in _sample(corpus, verdicts, cfg.plus_samples):
        res.checked += 1
        plus = recognize(g_plus(G))
        if plus.is_path_graph != verdicts[s].is_path_graph:
            _fail(res, f"subtree seed {s}: G {verdicts[s].kind}, G+ {plus.kind}")
    return res


# -- suite 7 ---------------------------------------------------------------

class LawChecker:
    """Callback for :func:`record_profiles` that audits every profile."""

    def __init__(self):
        self.res = SuiteResult(7, "", 0)
        self.counts = {"witnessless_pairs": 0, "partition_checks": 0}
        self._busy = False

    def __call__(self, p: SeparationProfile) -> None:
        if self._busy:
            return
        self._busy = True
        try:
            self.res.checked += 1
            for msg in self.violations(p):
                _fail(self.res, f"Q={sorted(p.separator)}: {msg}")
        finally:
            self._busy = False

    def violations(self, p: SeparationProfile) -> list[str]:
        out = []
        dom = p.dominance_edges()
        if p.antipodal & dom:
            out.append("antipodal and dominance overlap")
        if p.parts:
            traces = {part.part_id: part.traces for part in p.parts}
            att = {frozenset((a, b)) for a, b in combinations(p.part_ids, 2) if attached(traces[a], traces[b])}
            if att != (p.antipodal | dom):
                out.append("antipodal + dominance differ from attachedness")
            for pair in p.antipodal:
                a, b = tuple(pair)
                for t in traces[a]:
                    for t2 in traces[b]:
                        if t & t2 and not (t <= t2 or t2 <= t):
                            if any(not {a, b} <= p.neighboring.get(v, frozenset()) for v in t & t2):
                                out.append(f"antipodal {a},{b} not neighboring on {sorted(t & t2)}")
        self.counts["witnessless_pairs"] += len(p.witnessless)
        for a, b in p.dominance:
            for c in p.part_ids:
                if (b, c) in p.dominance and a != c and (a, c) not in p.dominance:
                    out.append(f"dominance not transitive on {a},{b},{c}")
        q = quotient_profile(p)
        q2 = quotient_profile(q)
        if (q2.part_ids, q2.antipodal, q2.dominance) != (q.part_ids, q.antipodal, q.dominance):
            out.append("quotient not idempotent")
        if any((b, a) in q.dominance for a, b in q.dominance):
            out.append("quotiented dominance not antisymmetric")
        if find_full_antipodal_triple(q) is None:
            self.counts["partition_checks"] += 1
            try:
                dp = d_partition(q)
            except TooManyUppersError as exc:
                return out + [f"triple-free but {exc}"]
            if not dp.covers(q.part_ids):
                out.append("D-sets do not partition the parts")
            for (i, j), members in dp.pairs.items():
                allowed = members | dp.singles[i] | dp.singles[j]
                for g in members:
                    if not (q.dominators(g) | q.antipodal_neighbors(g)) <= allowed:
                        out.append(f"part {g} of D_{i},{j} relates outside D_{i},{j} + D_{i} + D_{j}")
        return out


# -- suite 8 ---------------------------------------------------------------

def _members(family: str) -> range:
    lo = 1 if family.startswith("W") else 2
    return range(lo, TEMPLATE_MAX[family] + 1)


def _statements_at_template(family: str, param: int, make: Callable) -> tuple[bool, bool]:
    """Do statements (b) and (e) catch the realized template at its separator?"""
    G = template_graph(family, param)
    Q, _ = template_traces(family, param)
    p = quotient_profile(build_profile(G, Q, maximal_cliques(G)))
    full = lambda t: p.are_neighboring(t) is not None  # noqa: E731
    b = find_forbidden(attachedness_graph(p), FAMILIES_SUBGRAPH, False, full, max_vertices=64, make=make)
    H = g_plus(G)
    p2 = quotient_profile(build_profile(H, Q, maximal_cliques(H)))
    e = find_forbidden(attachedness_graph(p2), FAMILIES, True, max_vertices=64, make=make)
    return b is not None, e is not None


def mutation_smoke(families=FAMILIES, params_for_s5: int = 2) -> dict[tuple[str, str, str], str]:
    """Flip each edge color of the smallest member of each family.

    Returns ``(family, u, v) -> how it was caught``: ``"s8"`` when some
    mutated member becomes strongly colorable, ``"s5"`` when the colored
    search stops recognizing some realized member, ``""`` if it survived.
    """
    out = {}
    for fam in families:
        base = make_template(fam, _members(fam).start)
        for e in sorted(base.graph.edges, key=lambda x: sorted(x)):
            u, v = sorted(e)

            def make(f, k, fam=fam, e=e, u=u, v=v):
                t = make_template(f, k)
                return flip_edge(t, u, v) if f == fam and e in t.graph.edges else t

            caught = ""
            for k in _members(fam):
                if strong_coloring_bruteforce(template_as_profile(make(fam, k)), max_parts=12) is not None:
                    caught = "s8"
                    break
            if not caught:
                for k in list(_members(fam))[:params_for_s5]:
                    if not all(_statements_at_template(fam, k, make)):
                        caught = "s5"
                        break
            out[(fam, u, v)] = caught
    return out


@_timed(8, "template sanity", None)
def suite_templates() -> SuiteResult:
    res = SuiteResult(8, "", 0)
    for fam in FAMILIES:
        for k in _members(fam):
            res.checked += 1
            t = make_template(fam, k)
            if strong_coloring_bruteforce(template_as_profile(t), max_parts=12) is not None:
                _fail(res, f"{t.name} is strongly colorable")
            if k <= 3:
                res.checked += 1
                G = template_graph(fam, k)
                v = recognize(G)
                if v.is_path_graph or v.witness.kind != "template" or v.witness.family != fam:
                    _fail(res, f"realized {t.name} gives {v.kind} {v.witness and v.witness.to_dict()}")
                if not all(_statements_at_template(fam, k, make_template)):
                    _fail(res, f"realized {t.name} missed by the colored search")
    caught = mutation_smoke()
    res.checked += len(caught)
    for key, how in caught.items():
        if not how:
            _fail(res, f"mutation {key} survived")
    res.notes.update(mutations=len(caught), by_s8=sum(h == "s8" for h in caught.values()),
                     by_s5=sum(h == "s5" for h in caught.values()))
    return res


# -- driver ----------------------------------------------------------------

def run_all(cfg: SelftestConfig | None = None, only: set[int] | None = None,
            report: Callable[[SuiteResult], None] | None = None) -> list[SuiteResult]:
    """Run the suites in order; ``report`` sees each result as it finishes."""
    cfg = cfg or SelftestConfig()
    if cfg.samples <= 0 and cfg.max_n <= 0:
        log.warning("caps of zero: the sampled suites pass vacuously")
    want = only or set(range(1, 9))
    results: list[SuiteResult] = []

    def emit(r: SuiteResult) -> None:
        results.append(r)
        if report:
            report(r)

    laws = LawChecker()
    corpus: list = []
    verdicts: dict = {}
    with record_profiles(laws):
        if 1 in want:
            emit(suite_figure1())
        if 2 in want:
            emit(suite_triple())
        if want & {3, 5, 6}:
            corpus = subtree_corpus(cfg.samples, cfg.seed, cfg.max_cliques)
        if 3 in want:
            emit(suite_differential(cfg, corpus, verdicts))
        elif corpus:
            verdicts.update((s, recognize(G)) for s, G in corpus)
        if 4 in want:
            emit(suite_strong_weak(cfg))
        if 5 in want:
            emit(suite_statements(cfg, corpus, verdicts))
        if 6 in want:
            emit(suite_gplus(cfg, corpus, verdicts))
    if 7 in want:
        r = laws.res
        r.number, r.name = 7, "relation laws"
        r.notes.update(laws.counts)
        emit(r)
    if 8 in want:
        emit(suite_templates())
    return results


def separator_corpus(count: int, seed: int) -> list[SimpleGraph]:
    """Extra graphs built around one separator, used by the unit tests."""
    return [random_separator_graph(seed * 100_003 + k) for k in range(count)]
