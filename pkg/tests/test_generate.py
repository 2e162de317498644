from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arborswap.digraph import Digraph, indegrees
from arborswap.families import exhaustive_battery, exhaustive_family, random_battery, sample_pairs
from arborswap.generate import generate_instance, merge_pools, random_arborescence, restrict
from arborswap.multiroot import check_feasible_multiroot
from arborswap.packing import PackingInstance, check_feasible, is_arborescence


@given(st.integers(1, 8), st.integers(0, 2**31))
def test_random_arborescence(n, seed):
    pairs = random_arborescence(random.Random(seed), n, 0)
    D = Digraph.from_pairs(n, pairs, 0)
    assert is_arborescence(D, D.all_arcs, 0)


def test_merge_pools_shares_arcs():
    pool, (a, b) = merge_pools([(0, 1), (0, 1), (1, 2)], [(0, 1), (2, 1)])
    assert pool == [(0, 1), (0, 1), (1, 2), (2, 1)]
    assert a == [0, 1, 2] and b == [0, 3]


@given(
    st.integers(1, 7), st.integers(1, 3), st.integers(0, 2**31), st.integers(0, 4), st.booleans()
)
def test_generated_sets_feasible(n, k, seed, extra, multi):
    g = generate_instance(n, k, seed, extra, multiroot=multi)
    assert g == generate_instance(n, k, seed, extra, multiroot=multi)
    for F in (g.S, g.T):
        if multi:
            assert check_feasible_multiroot(k, g.digraph, F)
        else:
            assert check_feasible(PackingInstance(g.digraph, k, 0), F)


def test_generate_validation():
    with pytest.raises(ValueError):
        generate_instance(0, 1, 0)


def test_restrict():
    g = generate_instance(4, 2, 1, 3)
    sub, mapping = restrict(g.digraph, sorted(g.S))
    assert sub.m == len(g.S)
    S = frozenset(mapping[a] for a in g.S)
    assert check_feasible(PackingInstance(sub, 2, 0), S)


def test_exhaustive_family_counts():
    # rooted classes on 3 vertices with single arcs: subsets of 4 pair types under the a<->b swap
    assert len(list(exhaustive_family(3, 1, 10))) == 10
    # nine multiplicity vectors on {0->1, 1->0}, six orbits under swapping the two vertices
    assert len(list(exhaustive_family(2, 2, 10, rooted=False))) == 6
    for D in exhaustive_family(3, 2, 10):
        assert indegrees(D, D.all_arcs)[0] == 0
        assert all(a.tail != a.head for a in D.arcs)


def test_exhaustive_battery_size_bounds():
    for b in exhaustive_battery(2):
        assert b.digraph.n <= 4 and b.digraph.m <= 10 and b.digraph.m >= 2 * (b.digraph.n - 1)


def test_random_battery():
    bat = random_battery(20, 2, seed=4)
    assert len(bat) == 20 and all(b.digraph.m <= 16 and b.digraph.n <= 5 for b in bat)
    assert bat == random_battery(20, 2, seed=4)


def test_sample_pairs():
    nodes = [frozenset({i}) for i in range(5)]
    assert len(sample_pairs(nodes, 100)) == 20
    sample = sample_pairs(nodes, 7, seed=1)
    assert len(sample) == 7 and all(S != T for S, T in sample)
