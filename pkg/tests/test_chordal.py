import networkx as nx
from hypothesis import given, settings, strategies as st

from pathgraphs import (
    CliqueTree,
    build_clique_tree,
    clique_separators,
    is_chordal,
    maximal_cliques,
    mcs_order,
    verify_clique_path_tree,
)
from pathgraphs.chordal import elimination_failure
from pathgraphs.generators import random_subtree_graph

from conftest import graph

FIG1_CLIQUES = {frozenset(c) for c in ("abc", "cde", "bce", "beg", "bfg", "egh")}
K4 = graph("ab ac ad bc bd cd")
C4 = graph("ab bc cd da")
C5 = graph("ab bc cd de ea")


def fig1_tree(center_star=False):
    cl = [frozenset(c) for c in ("abc", "bce", "cde", "beg", "bfg", "egh")]
    if center_star:
        edges = {(1, 0), (1, 2), (1, 3), (1, 4), (1, 5)}
    else:
        edges = {(0, 1), (2, 1), (1, 3), (3, 4), (3, 5)}
    return CliqueTree(tuple(cl), frozenset(edges))


def test_mcs_orders():
    assert elimination_failure(K4, mcs_order(K4)) is None
    assert elimination_failure(C4, mcs_order(C4)) is not None


def test_mcs_figure1(fig1):
    assert elimination_failure(fig1, mcs_order(fig1)) is None


def test_holes():
    for cyc in (C4, C5):
        ok, hole = is_chordal(cyc)
        assert not ok and len(hole) == len(cyc)


def test_figure1_chordal(fig1):
    assert is_chordal(fig1) == (True, None)


def test_maximal_cliques(fig1):
    assert set(maximal_cliques(fig1)) == FIG1_CLIQUES
    assert maximal_cliques(K4) == [frozenset("abcd")]
    assert set(maximal_cliques(graph("ab bc"))) == {frozenset("ab"), frozenset("bc")}


def test_clique_tree_small():
    assert build_clique_tree(K4).edges == frozenset()
    T = build_clique_tree(graph("ab bc cd"))
    assert T.is_tree() and len(T.cliques) == 3
    assert verify_clique_path_tree(graph("ab bc cd"), T)


def test_clique_tree_figure1(fig1):
    T = build_clique_tree(fig1)
    assert T.is_tree()
    assert set(T.cliques) == FIG1_CLIQUES
    assert CliqueTree.from_dict(T.to_dict()) == T
    assert T.to_dot().startswith("graph")


def test_separators(fig1):
    assert set(clique_separators(fig1)) == {frozenset("bce"), frozenset("beg")}
    assert clique_separators(K4) == []
    star = graph("ca cb cd")
    assert set(clique_separators(star)) == {frozenset("ca"), frozenset("cb"), frozenset("cd")}


def test_verify_path_tree(fig1):
    assert verify_clique_path_tree(fig1, fig1_tree())
    # g lies in beg, bfg, egh, three leaves of the star
    assert not verify_clique_path_tree(fig1, fig1_tree(center_star=True))
    assert verify_clique_path_tree(K4, CliqueTree((frozenset("abcd"),), frozenset()))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_subtree_graphs_against_networkx(n, seed):
    G = random_subtree_graph(n, seed)
    H = G.to_networkx()
    assert is_chordal(G)[0] and nx.is_chordal(H)
    ours = set(maximal_cliques(G))
    assert ours == {frozenset(c) for c in nx.find_cliques(H)}
    if nx.is_connected(H):
        assert build_clique_tree(G).is_tree()


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.sampled_from("0123456"), st.sampled_from("0123456")).filter(lambda e: e[0] != e[1]), max_size=14))
def test_chordality_matches_networkx(edges):
    from pathgraphs import SimpleGraph

    G = SimpleGraph(edges=edges)
    ok, hole = is_chordal(G)
    assert ok == nx.is_chordal(G.to_networkx())
    if not ok:
        assert len(hole) >= 4
        assert all(G.has_edge(hole[i], hole[(i + 1) % len(hole)]) for i in range(len(hole)))
        # chordless
        k = len(hole)
        assert not any(G.has_edge(hole[i], hole[j]) for i in range(k) for j in range(i + 2, k) if (i, j) != (0, k - 1))
