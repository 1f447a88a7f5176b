import random

import pytest
from hypothesis import given, settings, strategies as st

from pathgraphs import antipodality_holds, build_profile, dominance_holds, quotient_profile
from pathgraphs.generators import random_separator_graph, random_trace_profile
from pathgraphs.separation import SeparatorError, profile_from_traces

from conftest import graph


def fs(*traces):
    return frozenset(frozenset(t) for t in traces)


def test_figure1_profile(fig1):
    p = build_profile(fig1, "bce")
    comps = {p.part(i).component: p.part(i).traces for i in p.part_ids}
    assert comps == {
        frozenset("a"): fs("bc"),
        frozenset("d"): fs("ce"),
        frozenset("fgh"): fs("be", "b", "e"),
    }
    assert len(p.antipodal) == 3 and not p.dominance


def test_g2_profile(g2):
    p = build_profile(g2, ["x", "y1", "y2", "y3"])
    assert len(p) == 3
    assert {t for i in p.part_ids for t in p.part(i).traces} == {
        frozenset({"x", "y1"}), frozenset({"x", "y2"}), frozenset({"x", "y3"})}
    assert len(p.antipodal) == 3
    assert p.neighboring["x"] == frozenset(p.part_ids)


def test_not_separating():
    with pytest.raises(SeparatorError):
        build_profile(graph("ab ac ad bc bd cd"), "abcd")


def test_dominance_examples():
    assert dominance_holds(fs("b"), fs("bc"))
    assert not dominance_holds(fs("bc"), fs("b"))
    assert dominance_holds(fs("bc"), fs("bc"))


def test_g3_chain(g3):
    p = build_profile(g3, "zbc")
    d = next(i for i in p.part_ids if p.part(i).component == {"d"})
    a = next(i for i in p.part_ids if p.part(i).component == {"a"})
    assert p.leq(d, a) and not p.leq(a, d)
    assert not p.antipodal


def test_antipodality_examples():
    assert antipodality_holds(fs("bc"), fs("ce"))
    assert not antipodality_holds(fs("b"), fs("bc"))
    assert not antipodality_holds(fs("ab"), fs("cd"))


def test_quotient_merges_twins(g4):
    p = build_profile(g4, "zbc")
    assert len(p) == 2
    q = quotient_profile(p)
    assert len(q) == 1


def test_quotient_identity(fig1):
    p = build_profile(fig1, "bce")
    q = quotient_profile(p)
    assert q.part_ids == p.part_ids and q.antipodal == p.antipodal


def test_antipodal_without_incomparable_witness():
    # {a,b} against {a},{c}: {a} nests in {a,b} and {c} misses it, yet {a,b} splits
    # the second part's traces, so neither dominates
    p = profile_from_traces("abcd", [[{"a", "b"}], [{"a"}, {"c"}]])
    assert p.antipodal == {frozenset({1, 2})}
    assert p.witnessless == p.antipodal


def _laws(p):
    dom = p.dominance_edges()
    assert not (dom & p.antipodal)
    attached = set()
    for a in p.part_ids:
        for b in p.part_ids:
            if a < b:
                ta, tb = p.part(a).traces, p.part(b).traces
                if any(x & y for x in ta for y in tb):
                    attached.add(frozenset((a, b)))
    assert dom | p.antipodal == attached
    for a, b in p.dominance:
        for c in p.dominators(b):
            if c != a:
                assert (a, c) in p.dominance
    for v, members in p.neighboring.items():
        assert members == {i for i in p.part_ids if any(v in t for t in p.part(i).traces)}


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_relation_laws_random_profiles(seed, dominated):
    _laws(random_trace_profile(random.Random(seed), dominated=dominated))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_relation_laws_separator_graphs(seed):
    G = random_separator_graph(seed)
    Q = sorted(v for v in G.vertices if v.startswith("q"))
    p = build_profile(G, Q)
    _laws(p)
    q = quotient_profile(p)
    for a, b in q.dominance:
        assert (b, a) not in q.dominance
    assert len(quotient_profile(q)) == len(q)
