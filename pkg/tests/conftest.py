import pytest

from pathgraphs import parse_edge_list
from pathgraphs.selftest import figure1_graph, g2_graph


def graph(text: str):
    """Edge list written as space-separated two-letter or dash-joined pairs."""
    pairs = [tok.split("-") if "-" in tok else list(tok) for tok in text.split()]
    return parse_edge_list("\n".join(f"{u} {v}" for u, v in pairs))


@pytest.fixture
def fig1():
    return figure1_graph()


@pytest.fixture
def g2():
    return g2_graph()


@pytest.fixture
def g3():
    # triangle zbc, a sees b and c, d sees b
    return graph("zb zc bc ab ac db")


@pytest.fixture
def g4():
    return graph("zb zc bc a1-b a1-c a2-b a2-c")
