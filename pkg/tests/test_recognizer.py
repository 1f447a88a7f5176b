import json

import pytest
from hypothesis import given, settings, strategies as st

from pathgraphs import (
    ForbiddenWitness,
    build_profile,
    d_partition,
    extract_certificate,
    g_plus,
    partial_coloring,
    quotient_profile,
    recognize,
    verify_certificate,
    verify_clique_path_tree,
    weak_coloring,
)
from pathgraphs.coloring import PartialColoringConflict, TripleWitness, TwoColoringConflict
from pathgraphs.generators import random_subtree_graph
from pathgraphs.oracle import oracle_is_path_graph
from pathgraphs.recognizer import NOT_CHORDAL, NOT_PATH_GRAPH, PATH_GRAPH, forbidden_statement
from pathgraphs.separation import abstract_profile

from conftest import graph

G2_Q = frozenset({"x", "y1", "y2", "y3"})


def test_figure1(fig1):
    v = recognize(fig1, path_tree=True)
    assert v.kind == PATH_GRAPH and v.witness is None
    assert [sorted(r.separator) for r in v.separators] == [["b", "c", "e"], ["b", "e", "g"]]
    assert verify_clique_path_tree(fig1, v.path_tree.host_tree)
    assert json.loads(json.dumps(v.to_dict()))["verdict"] == PATH_GRAPH


def test_g2(g2):
    v = recognize(g2)
    assert v.kind == NOT_PATH_GRAPH
    w = v.witness
    assert w.kind == "full_triple" and w.triple.witness_vertex == "x" and w.separator == G2_Q
    p = quotient_profile(build_profile(g2, G2_Q))
    assert verify_certificate(p, w)
    assert verify_certificate(p, ForbiddenWitness.from_dict(json.loads(json.dumps(w.to_dict()))))


def test_c4():
    v = recognize(graph("ab bc cd da"))
    assert v.kind == NOT_CHORDAL and len(v.hole) == 4


def test_fabricated_triple_rejected(fig1):
    p = build_profile(fig1, "bce")
    fake = ForbiddenWitness(frozenset("bce"), "full_triple", TripleWitness((1, 2, 3), "b"))
    assert not verify_certificate(p, fake)
    empty = ForbiddenWitness(frozenset("bce"), "template", family="W0", param=1, embedding={})
    assert not verify_certificate(p, empty)


def test_g_plus_sizes(fig1):
    k1 = graph("")
    from pathgraphs import SimpleGraph

    assert g_plus(SimpleGraph(["a"])).n_edges == 1
    H = g_plus(fig1)
    assert len(H) == 16 and H.n_edges == 21
    assert recognize(H).kind == PATH_GRAPH


def test_g_plus_label_collision():
    from pathgraphs import SimpleGraph

    H = g_plus(SimpleGraph(["a", "a+"], [("a", "a+")]))
    assert len(H) == 4 and H.n_edges == 3


def test_partial_conflict_gives_df():
    # the edges 1-2, 2-3, 1-4 are forced in any profile coming from a graph
    p = abstract_profile(
        [1, 2, 3, 4, 5],
        antipodal=[(5, 3), (5, 4), (1, 2), (2, 3), (1, 4)],
        dominance=[(3, 1), (4, 2), (5, 1), (5, 2)],
        neighboring={"q": [1, 2, 5]},
    )
    dp = d_partition(p)
    with pytest.raises(PartialColoringConflict) as err:
        partial_coloring(p, dp)
    w = extract_certificate(p, dp, err.value)
    assert w.family == "DF" and w.param == 2
    assert set(w.embedding.values()) == {1, 2, 3, 4, 5}
    assert verify_certificate(p, w)


def test_odd_cycle_gives_w0():
    rim = [2, 3, 4, 5, 6]
    p = abstract_profile([1] + rim, antipodal=[(rim[i], rim[(i + 1) % 5]) for i in range(5)],
                         dominance=[(r, 1) for r in rim])
    dp = d_partition(p)
    with pytest.raises(TwoColoringConflict) as err:
        weak_coloring(p, dp, partial_coloring(p, dp))
    w = extract_certificate(p, dp, err.value)
    assert w.family == "W0" and w.param == 2 and w.embedding["h"] == 1
    assert verify_certificate(p, w)


def counterexample(with_w: bool):
    # clique abcd; x sees abc, y sees x and a, z sees a and b, w sees a and d
    text = "ab ac ad bc bd cd xa xb xc yx ya za zb"
    return graph(text + (" wa wd" if with_w else ""))


@pytest.mark.parametrize("with_w,expected", [(False, PATH_GRAPH), (True, NOT_PATH_GRAPH)])
def test_witnessless_antipodality_graphs(with_w, expected):
    G = counterexample(with_w)
    assert recognize(G).kind == expected
    assert bool(oracle_is_path_graph(G)) == (expected == PATH_GRAPH)


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10**6))
def test_agrees_with_oracle(n, seed):
    G = random_subtree_graph(n, seed)
    v = recognize(G, path_tree=True)
    res = oracle_is_path_graph(G, max_cliques=12)
    assert v.is_path_graph == bool(res)
    if v.is_path_graph:
        assert verify_clique_path_tree(G, v.path_tree.host_tree)
    else:
        r = v.failing
        assert verify_certificate(r.profile, v.witness)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_g_plus_invariance(n, seed):
    G = random_subtree_graph(n, seed)
    assert recognize(G).is_path_graph == recognize(g_plus(G)).is_path_graph


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_statements_match_verdict(n, seed):
    G = random_subtree_graph(n, seed)
    ok = recognize(G).is_path_graph
    assert (forbidden_statement(G, plus=False) is None) == ok
    assert (forbidden_statement(G, plus=True) is None) == ok
