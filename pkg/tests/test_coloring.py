import random

import pytest
from hypothesis import given, settings, strategies as st

from pathgraphs import (
    abstract_profile,
    build_profile,
    cross_set,
    d_partition,
    find_full_antipodal_triple,
    partial_coloring,
    quotient_profile,
    strong_coloring_bruteforce,
    upper_bounds,
    weak_coloring,
)
from pathgraphs.coloring import PartialColoringConflict, TwoColoringConflict, is_strong_coloring, validate_weak_coloring
from pathgraphs.generators import random_trace_profile

FIG2 = dict(part_ids=range(1, 7), dominance=[(2, 1), (6, 1), (3, 4), (5, 4), (6, 4)])


@pytest.fixture
def fig1_profile(fig1):
    return build_profile(fig1, "bce")


def test_figure2_uppers_and_blocks():
    p = abstract_profile(**FIG2)
    assert upper_bounds(p) == (1, 4)
    dp = d_partition(p)
    assert dp.singles == {1: {1, 2}, 2: {3, 4, 5}}
    assert dp.pairs == {(1, 2): {6}}


def test_figure1_coloring(fig1_profile):
    p = fig1_profile
    assert upper_bounds(p) == (1, 2, 3)
    dp = d_partition(p)
    assert dp.singles == {1: {1}, 2: {2}, 3: {3}} and not dp.pairs
    assert cross_set(p, dp) == {1, 2, 3}
    pc = partial_coloring(p, dp)
    assert pc.assignment == {1: 1, 2: 2, 3: 3}
    assert weak_coloring(p, dp, pc).assignment == {1: 1, 2: 2, 3: 3}
    assert find_full_antipodal_triple(p) is None
    f = strong_coloring_bruteforce(p)
    assert f is not None and is_strong_coloring(p, f)


def test_chain(g3):
    p = quotient_profile(build_profile(g3, "zbc"))
    (top,) = upper_bounds(p)
    dp = d_partition(p)
    assert dp.singles == {1: frozenset(p.part_ids)}
    assert cross_set(p, dp) == set()
    assert weak_coloring(p, dp, partial_coloring(p, dp)).assignment == {i: 1 for i in p.part_ids}


def test_g2_triple(g2):
    p = build_profile(g2, ["x", "y1", "y2", "y3"])
    w = find_full_antipodal_triple(p)
    assert w is not None and w.witness_vertex == "x" and set(w.parts) == set(p.part_ids)
    assert strong_coloring_bruteforce(p) is None


def test_two_parts_have_no_triple():
    assert find_full_antipodal_triple(abstract_profile([1, 2], antipodal=[(1, 2)], neighboring={"v": [1, 2]})) is None


def test_partial_conflict():
    # uppers 1, 2; a=5 under both, b=3 under 1, c=4 under 2
    p = abstract_profile(
        [1, 2, 3, 4, 5],
        antipodal=[(5, 3), (5, 4)],
        dominance=[(3, 1), (4, 2), (5, 1), (5, 2)],
    )
    dp = d_partition(p)
    with pytest.raises(PartialColoringConflict) as err:
        partial_coloring(p, dp)
    assert err.value.part == 5 and {err.value.left, err.value.right} == {3, 4}


def test_odd_cycle_conflict():
    rim = [2, 3, 4, 5, 6]
    p = abstract_profile(
        [1] + rim,
        antipodal=[(rim[i], rim[(i + 1) % 5]) for i in range(5)],
        dominance=[(r, 1) for r in rim],
    )
    dp = d_partition(p)
    with pytest.raises(TwoColoringConflict) as err:
        weak_coloring(p, dp, partial_coloring(p, dp))
    assert err.value.kind == "odd_cycle"


def test_chain_without_antipodality():
    p = abstract_profile([1, 2], dominance=[(2, 1)])
    dp = d_partition(p)
    assert weak_coloring(p, dp, partial_coloring(p, dp)).assignment == {1: 1, 2: 1}


def test_single_part_strongly_colorable():
    assert strong_coloring_bruteforce(abstract_profile([1])) is not None


def _weak_ok(p):
    if find_full_antipodal_triple(p) is not None:
        return False
    dp = d_partition(p)
    try:
        wc = weak_coloring(p, dp, partial_coloring(p, dp))
    except (PartialColoringConflict, TwoColoringConflict):
        return False
    assert validate_weak_coloring(p, dp, wc.assignment) == []
    return True


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**7), st.booleans())
def test_strong_iff_weak(seed, dominated):
    p = random_trace_profile(random.Random(seed), dominated=dominated)
    q = quotient_profile(p)
    assert (strong_coloring_bruteforce(p) is not None) == _weak_ok(q)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**7))
def test_d_partition_covers_when_triple_free(seed):
    q = quotient_profile(random_trace_profile(random.Random(seed), dominated=True))
    if find_full_antipodal_triple(q) is None:
        assert d_partition(q).covers(q.part_ids)
