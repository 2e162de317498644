from __future__ import annotations

import pytest
from hypothesis import given

from arborswap.audit import LemmaAudit
from arborswap.digraph import Digraph, indegrees
from arborswap.families import exhaustive_family
from arborswap.multiroot import (
    HatInstance,
    check_feasible_multiroot,
    decompose_multiroot,
    rebalance_roots,
    reconfigure_multiroot,
    verify_sequence_multiroot,
)
from arborswap.oracle import enumerate_feasible, exchange_distance, is_decomposable
from arborswap.packing import (
    CutViolation,
    DegreeViolation,
    InfeasibleError,
    SizeViolation,
    check_feasible,
    certificate_holds,
    is_arborescence,
    verify_decomposition,
)
from arborswap.reconfig import StepKind, length_bound

from .strategies import generated

U, V = 0, 1


def test_hat_single_arc():
    D = Digraph.from_pairs(2, [(U, V)])
    H = HatInstance(D, 1)
    hat = H.hat({0})
    assert hat == {0} | set(H.hat_arcs(U)[:1])
    assert is_arborescence(H.digraph, hat, H.hat_root)


def test_hat_lone_vertex():
    D = Digraph.from_pairs(1, [])
    H = HatInstance(D, 1)
    assert H.hat(frozenset()) == frozenset(H.hat_arcs(U))
    assert check_feasible_multiroot(1, D, frozenset())


def test_hat_two_cycle_k2():
    D = Digraph.from_pairs(2, [(U, V), (V, U)])
    H = HatInstance(D, 2)
    hat = H.hat(D.all_arcs)
    assert hat - D.all_arcs == {H.hat_arcs(U)[0], H.hat_arcs(V)[0]}
    assert check_feasible_multiroot(2, D, D.all_arcs)
    assert enumerate_feasible(D, 2, None) == [D.all_arcs]


def test_multiroot_certificates():
    D = Digraph.from_pairs(3, [(0, 1), (0, 1), (1, 0), (1, 2)])
    v = check_feasible_multiroot(1, D, {0, 1})
    assert v.violation == DegreeViolation(1, 2, 1)
    v = check_feasible_multiroot(1, D, {0})
    assert v.violation == SizeViolation(1, 2)
    # {0, 1} is a 2-cycle with vertex 2 left out of any arborescence
    E = Digraph.from_pairs(3, [(0, 1), (1, 0)])
    v = check_feasible_multiroot(1, E, {0, 1})
    assert isinstance(v.violation, CutViolation)
    assert certificate_holds(E, {0, 1}, v.violation)


def test_rebalance_two_vertex_swap():
    D = Digraph.from_pairs(2, [(U, V), (V, U)])
    steps, S_m = rebalance_roots(1, D, {0}, {1})
    assert [s.kind for s in steps] == [StepKind.REBALANCE] and S_m == {1}
    seq = reconfigure_multiroot(1, D, {0}, {1})
    assert len(seq) == 1 == exchange_distance(D, 1, None, {0}, {1})


def test_rebalance_noop():
    D = Digraph.from_pairs(3, [(0, 1), (1, 2), (0, 2), (2, 1)])
    steps, S_m = rebalance_roots(1, D, {0, 1}, {2, 3})
    assert steps == [] and S_m == {0, 1}


def test_same_set_empty():
    D = Digraph.from_pairs(2, [(U, V)])
    assert len(reconfigure_multiroot(1, D, {0}, {0})) == 0


def test_distinct_roots_k1():
    # path 0->1->2 versus path 2->1->0 style arborescence rooted at 2
    D = Digraph.from_pairs(3, [(0, 1), (1, 2), (2, 1), (1, 0)])
    S, T = frozenset({0, 1}), frozenset({2, 3})
    seq = reconfigure_multiroot(1, D, S, T)
    assert verify_sequence_multiroot(1, D, S, T, seq)
    assert all(check_feasible_multiroot(1, D, F) for F in seq.states())
    assert len(seq) == exchange_distance(D, 1, None, S, T) == 2


def test_infeasible_rejected():
    D = Digraph.from_pairs(2, [(U, V), (V, U)])
    with pytest.raises(InfeasibleError):
        reconfigure_multiroot(1, D, {0, 1}, {0})


def test_equivalence_with_oracle_small():
    """A in F_k iff the hat packs k arborescences at the super-root."""
    for n in (1, 2, 3):
        for k in (1, 2):
            for D in exhaustive_family(n, k, 7, rooted=False):
                H = HatInstance(D, k)
                oracle = set(enumerate_feasible(D, k, None))
                for F in oracle:
                    assert check_feasible_multiroot(k, D, F)
                    hat = H.hat(F)
                    assert check_feasible(H.rooted, hat)
                    assert sum(1 for a in hat if H.is_synthetic(a)) == k
                    assert H.project(hat) == F
                for mask in range(1 << D.m):
                    F = frozenset(a for a in range(D.m) if mask >> a & 1)
                    assert check_feasible_multiroot(k, D, F).feasible == (F in oracle)


@given(generated(max_n=5, ks=(1, 2), max_extra=3, multiroot=True))
def test_round_trip_and_decompose(g):
    D = g.digraph
    H = HatInstance(D, g.k)
    for F in (g.S, g.T):
        assert H.project(H.hat(F)) == F
        parts = decompose_multiroot(g.k, D, F)
        assert verify_decomposition(D, g.k, None, parts)
        if D.m <= 14:
            assert is_decomposable(D, g.k, None, F)


@given(generated(max_n=6, ks=(1, 2, 3), max_extra=3, multiroot=True))
def test_reconfigure_random(g):
    D = g.digraph
    audit = LemmaAudit()
    seq = reconfigure_multiroot(g.k, D, g.S, g.T, audit)
    assert verify_sequence_multiroot(g.k, D, g.S, g.T, seq)
    assert len(seq) <= length_bound(len(g.S - g.T), g.k)
    if g.k == 1:
        assert len(seq) == len(g.S - g.T)
    assert audit.ok, audit.violations
    rebalance = [s for s in seq.steps if s.kind is StepKind.REBALANCE]
    assert seq.steps[: len(rebalance)] == rebalance


@given(generated(max_n=5, ks=(1, 2), multiroot=True))
def test_rebalance_matches_indegrees(g):
    D = g.digraph
    steps, S_m = rebalance_roots(g.k, D, g.S, g.T)
    assert indegrees(D, S_m) == indegrees(D, g.T)
    assert len(steps) <= len(g.S - g.T)
    assert check_feasible_multiroot(g.k, D, S_m)
