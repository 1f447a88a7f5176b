import pytest

from pathgraphs import attachedness_graph, build_profile, find_forbidden, g_plus, make_template, quotient_profile, recognize
from pathgraphs.coloring import strong_coloring_bruteforce
from pathgraphs.generators import template_graph
from pathgraphs.oracle import oracle_is_path_graph
from pathgraphs.recognizer import NOT_PATH_GRAPH, forbidden_statement
from pathgraphs.selftest import TEMPLATE_MAX, mutation_smoke
from pathgraphs.templates import ANTIPODAL, DOMINANCE, FAMILIES, flip_edge, template_as_profile


def _colors(t):
    out = {ANTIPODAL: 0, DOMINANCE: 0}
    for c in t.graph.edges.values():
        out[c] += 1
    return out


def test_w0_smallest():
    t = make_template("W0", 1)
    assert t.order == 4
    assert _colors(t) == {ANTIPODAL: 3, DOMINANCE: 3}


def test_f_smallest_is_a_fan():
    t = make_template("F", 2)
    assert t.order == 5 and len(t.graph.edges) == 7
    hub = {frozenset(e) - {"h"} for e in t.graph.edges if "h" in e}
    assert len(hub) == 4
    assert sorted(t.graph.color("h", p) for p in ("p0", "p1", "p2", "p3")) == [ANTIPODAL, ANTIPODAL, DOMINANCE, DOMINANCE]


def test_df_smallest_is_k5_minus_edge():
    t = make_template("DF", 2)
    assert t.order == 5 and len(t.graph.edges) == 9


def test_bad_parameters():
    with pytest.raises(ValueError):
        make_template("F", 1)
    with pytest.raises(ValueError):
        make_template("X", 3)


@pytest.mark.parametrize("family,param", [("W0", 1), ("W0", 2), ("W1", 1), ("W1", 2), ("F", 2), ("F", 3),
                                          ("Ftilde", 2), ("Ftilde", 3), ("DF", 2), ("DF", 3)])
def test_templates_not_strongly_colorable(family, param):
    assert strong_coloring_bruteforce(template_as_profile(make_template(family, param))) is None


@pytest.mark.parametrize("family,param", [("W0", 1), ("W0", 2), ("W1", 1), ("W1", 2), ("F", 2),
                                          ("Ftilde", 2), ("DF", 2), ("DF", 3)])
def test_realized_template(family, param):
    G = template_graph(family, param)
    Q = [v for v in G.vertices if not v.startswith("x_")]
    colored = attachedness_graph(quotient_profile(build_profile(G, Q)))
    t = make_template(family, param)
    assert len(colored.vertices) == t.order
    match = find_forbidden(colored, [family], induced=True)
    assert match is not None and match.family == family
    v = recognize(G)
    assert v.kind == NOT_PATH_GRAPH
    assert v.witness.kind == "full_triple" or v.witness.family == family
    if len(G) <= 12:
        assert not oracle_is_path_graph(G, max_cliques=12)


def test_g2_plus_has_induced_w0(g2):
    H = g_plus(g2)
    colored = attachedness_graph(quotient_profile(build_profile(H, ["x", "y1", "y2", "y3"])))
    m = find_forbidden(colored, ["W0"], induced=True)
    assert m is not None and m.param == 1


def test_figure1_statements(fig1):
    assert forbidden_statement(fig1, plus=False) is None
    assert forbidden_statement(fig1, plus=True) is None
    colored = attachedness_graph(build_profile(fig1, "bce"))
    assert find_forbidden(colored, FAMILIES, induced=False) is None
    assert find_forbidden(colored, [], induced=False) is None


def test_flip_edge_changes_one_color():
    t = make_template("W1", 1)
    m = flip_edge(t, "h", "r0")
    assert m.graph.color("h", "r0") == DOMINANCE
    diff = [e for e in t.graph.edges if t.graph.edges[e] != m.graph.edges[e]]
    assert len(diff) == 1


def test_every_single_flip_is_caught():
    caught = mutation_smoke()
    assert caught and all(caught.values())
