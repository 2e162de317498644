"""Multidigraph with identified arcs, plus the cut/degree arithmetic used everywhere.

Arc sets and vertex sets are plain ``frozenset[int]`` values over arc ids and
vertex ids respectively.  Parallel arcs are distinguished by id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, NamedTuple, Optional

ArcSet = frozenset
VertexSet = frozenset


class Arc(NamedTuple):
    id: int
    tail: int
    head: int


@dataclass(frozen=True)
class Digraph:
    """Immutable multidigraph on vertices ``0..n-1``.

    ``arcs[i].id == i`` always holds.  Self-loops are allowed here; they are
    rejected later by the feasibility checks.
    """

    n: int
    arcs: tuple[Arc, ...]
    root: Optional[int] = None
    _in_arcs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _out_arcs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        ins: list[list[int]] = [[] for _ in range(self.n)]
        outs: list[list[int]] = [[] for _ in range(self.n)]
        for pos, arc in enumerate(self.arcs):
            if arc.id != pos:
                raise ValueError(f"arc at position {pos} has id {arc.id}")
            for end in (arc.tail, arc.head):
                if not 0 <= end < self.n:
                    raise ValueError(f"arc {arc.id} references vertex {end} outside [0, {self.n})")
            ins[arc.head].append(arc.id)
            outs[arc.tail].append(arc.id)
        if self.root is not None and not 0 <= self.root < self.n:
            raise ValueError(f"root {self.root} outside [0, {self.n})")
        object.__setattr__(self, "_in_arcs", tuple(map(tuple, ins)))
        object.__setattr__(self, "_out_arcs", tuple(map(tuple, outs)))

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Iterable[tuple[int, int]], root: Optional[int] = None
    ) -> "Digraph":
        return cls(n, tuple(Arc(i, t, h) for i, (t, h) in enumerate(pairs)), root)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def vertices(self) -> VertexSet:
        return frozenset(range(self.n))

    @property
    def all_arcs(self) -> ArcSet:
        return frozenset(range(len(self.arcs)))

    def tail(self, a: int) -> int:
        return self.arcs[a].tail

    def head(self, a: int) -> int:
        return self.arcs[a].head

    def in_arcs(self, v: int) -> tuple[int, ...]:
        """Ids of all arcs with head ``v`` (ascending)."""
        return self._in_arcs[v]

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out_arcs[v]

    def with_root(self, root: Optional[int]) -> "Digraph":
        return Digraph(self.n, self.arcs, root)

    def arc_set(self, ids: Iterable[int]) -> ArcSet:
        s = frozenset(ids)
        bad = [a for a in s if not 0 <= a < len(self.arcs)]
        if bad:
            raise ValueError(f"arc ids out of range: {sorted(bad)}")
        return s


def delta_between(
    D: Digraph, F: AbstractSet[int], X: AbstractSet[int], Y: AbstractSet[int]
) -> list[Arc]:
    """Arcs of ``F`` going from ``X`` to ``Y``, ordered by id."""
    return [D.arcs[a] for a in sorted(F) if D.arcs[a].tail in X and D.arcs[a].head in Y]


def delta_in(D: Digraph, F: AbstractSet[int], X: AbstractSet[int]) -> list[Arc]:
    """Arcs of ``F`` entering ``X`` (tail outside, head inside), ordered by id."""
    return [D.arcs[a] for a in sorted(F) if D.arcs[a].head in X and D.arcs[a].tail not in X]


def count_in(D: Digraph, F: AbstractSet[int], X: AbstractSet[int]) -> int:
    arcs = D.arcs
    return sum(1 for a in F if arcs[a].head in X and arcs[a].tail not in X)


def contains_arc(X: AbstractSet[int], e: Arc) -> bool:
    return e.tail in X and e.head in X


def indegree(D: Digraph, F: AbstractSet[int], v: int) -> int:
    """Number of arcs of ``F`` with head ``v``; self-loops at ``v`` count."""
    return sum(1 for a in D.in_arcs(v) if a in F)


def indegrees(D: Digraph, F: AbstractSet[int]) -> list[int]:
    deg = [0] * D.n
    for a in F:
        deg[D.arcs[a].head] += 1
    return deg
