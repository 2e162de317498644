from __future__ import annotations

import math

import pytest

from arborswap.digraph import Digraph
from arborswap.oracle import (
    BudgetExceeded,
    ExchangeGraph,
    enumerate_feasible,
    exchange_distance,
    exchange_graph,
    find_decomposition,
    find_hard,
    hard_pairs,
)
from arborswap.packing import PackingInstance, check_feasible, verify_decomposition
from arborswap.reconfig import reconfigure

R, A, B = 0, 1, 2


def test_k1_square_three_sets(square):
    assert enumerate_feasible(square, 1, R) == [
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 3}),
    ]


def test_k2_square_one_set(square):
    assert enumerate_feasible(square, 2, R) == [square.all_arcs]


def test_single_vertex():
    D = Digraph.from_pairs(1, [], 0)
    assert enumerate_feasible(D, 1, 0) == [frozenset()]
    assert enumerate_feasible(D, 3, None) == [frozenset()]


def test_distances(square):
    S, T = frozenset({0, 2}), frozenset({1, 3})
    assert exchange_distance(square, 1, R, S, S) == 0
    assert exchange_distance(square, 1, R, S, T) == 2
    with pytest.raises(ValueError):
        exchange_distance(square, 1, R, S, {2, 3})


def test_disconnected_graph_reports_infinity():
    G = ExchangeGraph.build([frozenset({0, 1}), frozenset({2, 3})])
    assert G.distance({0, 1}, {2, 3}) == math.inf
    assert not G.is_connected() and len(G.components()) == 2


def test_budget():
    D = Digraph.from_pairs(2, [(0, 1)] * 13, 0)
    with pytest.raises(BudgetExceeded):
        enumerate_feasible(D, 1, 0)
    assert len(enumerate_feasible(D, 1, 0, max_arcs=13)) == 13


def test_find_decomposition_is_valid(square):
    parts = find_decomposition(square, 2, R, square.all_arcs)
    assert verify_decomposition(square, 2, R, parts)
    assert find_decomposition(square, 2, R, {0, 1, 2}) is None


def test_enumeration_matches_engine(square):
    D = Digraph.from_pairs(4, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 1), (1, 3), (0, 3)], 0)
    for k in (1, 2):
        feasible = set(enumerate_feasible(D, k, 0))
        inst = PackingInstance(D, k, 0)
        for mask in range(1 << D.m):
            F = frozenset(a for a in range(D.m) if mask >> a & 1)
            assert check_feasible(inst, F).feasible == (F in feasible)
        assert exchange_graph(D, k, 0).is_connected()


def test_hard_pairs_on_known_witness(hard):
    inst, S, T = hard
    pairs = hard_pairs(inst.digraph, 2, 0)
    assert any(h.S == S and h.T == T and h.distance == 3 for h in pairs)
    assert all(h.distance <= len(reconfigure(inst, h.S, h.T)) for h in pairs)


def test_find_hard_k1_is_empty():
    assert find_hard(150, k=1, seed=3, n_range=(3, 5)) == []


def test_find_hard_k2_finds_witness():
    found = find_hard(5000, k=2, seed=0, max_difference=2)
    assert found
    h = found[0]
    assert h.difference == 2 and h.distance == 3
    assert exchange_distance(h.digraph, 2, 0, h.S, h.T, max_arcs=16) == 3
