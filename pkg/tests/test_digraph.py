from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arborswap.digraph import (
    Arc,
    Digraph,
    contains_arc,
    count_in,
    delta_between,
    delta_in,
    indegree,
    indegrees,
)

from .strategies import digraphs


def two_cycle() -> Digraph:
    return Digraph.from_pairs(2, [(0, 1), (1, 0)])


def test_delta_in_two_cycle():
    D = two_cycle()
    assert delta_in(D, D.all_arcs, {1}) == [Arc(0, 0, 1)]


def test_delta_in_empty_set():
    D = two_cycle()
    assert delta_in(D, frozenset(), {0}) == []
    assert delta_in(D, frozenset(), {1}) == []


def test_delta_in_path():
    D = Digraph.from_pairs(3, [(0, 1), (1, 2)], 0)
    assert delta_in(D, D.all_arcs, {1, 2}) == [Arc(0, 0, 1)]


def test_delta_between_examples():
    D = two_cycle()
    assert delta_between(D, D.all_arcs, D.vertices, D.vertices) == list(D.arcs)
    assert delta_between(D, D.all_arcs, {0}, {1}) == [Arc(0, 0, 1)]
    E = Digraph.from_pairs(4, [(0, 1), (2, 3)])
    assert delta_between(E, E.all_arcs, {0, 1}, {2, 3}) == []


def test_contains_arc():
    e = Arc(0, 3, 5)
    assert contains_arc({3, 5}, e)
    assert not contains_arc({5}, e)
    D = Digraph.from_pairs(4, [(0, 1), (2, 3), (3, 3)])
    assert all(contains_arc(D.vertices, a) for a in D.arcs)


def test_indegree_examples():
    star = Digraph.from_pairs(4, [(0, 1), (0, 2), (0, 3)], 0)
    assert [indegree(star, star.all_arcs, v) for v in (1, 2, 3)] == [1, 1, 1]
    assert indegree(star, frozenset(), 1) == 0
    doubled = Digraph.from_pairs(2, [(0, 1), (0, 1)], 0)
    assert indegree(doubled, doubled.all_arcs, 1) == 2


def test_validation():
    with pytest.raises(ValueError):
        Digraph.from_pairs(2, [(0, 2)])
    with pytest.raises(ValueError):
        Digraph(2, (Arc(1, 0, 1),))
    with pytest.raises(ValueError):
        Digraph.from_pairs(2, [], root=2)
    D = two_cycle()
    with pytest.raises(ValueError):
        D.arc_set([5])


def test_adjacency_and_with_root():
    D = Digraph.from_pairs(3, [(0, 1), (2, 1), (1, 0)])
    assert D.in_arcs(1) == (0, 1)
    assert D.out_arcs(1) == (2,)
    assert D.with_root(2).root == 2 and D.with_root(2).arcs == D.arcs


@given(digraphs(max_n=6, max_m=12, loops=True, root=False), st.data())
def test_four_way_partition(D, data):
    F = data.draw(st.frozensets(st.sampled_from(range(D.m)))) if D.m else frozenset()
    X = data.draw(st.frozensets(st.sampled_from(range(D.n)))) if D.n else frozenset()
    rest = D.vertices - X
    total = (
        len(delta_in(D, F, X))
        + len(delta_between(D, F, X, X))
        + len(delta_between(D, F, X, rest))
        + len(delta_between(D, F, rest, rest))
    )
    assert total == len(F)
    assert count_in(D, F, X) == len(delta_in(D, F, X))


@given(digraphs(max_n=6, max_m=12, root=False), st.data())
def test_delta_in_singleton_matches_indegree(D, data):
    F = data.draw(st.frozensets(st.sampled_from(range(D.m)))) if D.m else frozenset()
    deg = indegrees(D, F)
    for v in range(D.n):
        assert len(delta_in(D, F, {v})) == indegree(D, F, v) == deg[v]


@given(digraphs(max_n=5, max_m=10, loops=True, root=False), st.data())
def test_set_algebra_matches_lists(D, data):
    ids = st.sampled_from(range(D.m)) if D.m else st.nothing()
    F = data.draw(st.frozensets(ids))
    G = data.draw(st.frozensets(ids))
    verts = st.sampled_from(range(D.n))
    X = data.draw(st.frozensets(verts))
    Y = data.draw(st.frozensets(verts))
    naive_F, naive_G = sorted(F), sorted(G)
    assert sorted(F | G) == sorted(set(naive_F + naive_G))
    assert sorted(F & G) == [a for a in naive_F if a in naive_G]
    assert sorted(F - G) == [a for a in naive_F if a not in naive_G]
    assert delta_between(D, F | G, X, Y) == [
        a for a in D.arcs if (a.id in F or a.id in G) and a.tail in X and a.head in Y
    ]
