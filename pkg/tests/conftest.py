from __future__ import annotations

import pytest
from hypothesis import settings

from arborswap.digraph import Digraph
from arborswap.packing import PackingInstance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

R, A, B = 0, 1, 2


@pytest.fixture
def square() -> Digraph:
    """Root 0 with arcs r->a, r->b, a->b, b->a (ids 0..3)."""
    return Digraph.from_pairs(3, [(R, A), (R, B), (A, B), (B, A)], R)


@pytest.fixture
def hard() -> tuple[PackingInstance, frozenset[int], frozenset[int]]:
    """A k=2 pair at exchange distance 3 while |S - T| = 2, found by the random search."""
    D = Digraph.from_pairs(
        5,
        [(0, 3), (3, 4), (1, 2), (0, 1), (1, 4), (4, 3), (3, 2), (2, 1), (2, 4), (4, 2)],
        0,
    )
    S = frozenset({0, 1, 2, 3, 5, 7, 8, 9})
    T = frozenset({0, 3, 4, 5, 6, 7, 8, 9})
    return PackingInstance(D, 2, 0), S, T
