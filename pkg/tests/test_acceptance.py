"""Acceptance criteria 1-8 at their stated sizes and time limits.

The suites run once per session; each test reports one PASS/FAIL line.
"""

import pytest

from pathgraphs.selftest import SelftestConfig, run_all

CRITERIA = {
    1: "figure-1 pipeline",
    2: "full-triple certificate",
    3: "differential master test",
    4: "strong/weak equivalence",
    5: "forbidden-structure statements",
    6: "G+ invariance",
    7: "relation laws",
    8: "template sanity",
}


@pytest.fixture(scope="module")
def results():
    cfg = SelftestConfig()
    assert cfg.max_n == 6 and cfg.samples >= 10_000 and cfg.profiles >= 1_000 and cfg.plus_samples >= 1_000
    return {r.number: r for r in run_all(cfg)}


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=[f"{k}-{v}" for k, v in sorted(CRITERIA.items())])
def test_criterion(results, number, capsys):
    r = results[number]
    with capsys.disabled():
        print("\n" + r.line())
    assert r.checked > 0
    assert not r.failures, r.failures
    assert r.passed, f"over time: {r.seconds:.1f}s >= {r.limit}s"


def test_sizes(results):
    import networkx as nx

    from pathgraphs.generators import all_labeled_graphs

    # count the 6-vertex population independently of our chordality code
    expected = sum(1 for G in all_labeled_graphs(6)
                   if nx.is_connected(H := G.to_networkx()) and nx.is_chordal(H))
    assert results[3].notes["exhaustive"] == expected
    assert results[3].notes["sampled"] >= 10_000
    assert results[4].checked >= 1_000
    assert results[6].checked >= 1_000
