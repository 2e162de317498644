"""Minimal tight sets with respect to a feasible arc set.

A vertex set X avoiding the root is *tight* for a feasible S when exactly k
arcs of S enter it.  Tight sets that meet are closed under union and
intersection, so for every arc f there is a unique inclusion-minimal tight
set containing both ends of f, unless no tight set contains f at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Optional

from .digraph import Arc, count_in
from .maxflow import max_flow_min_cut
from .packing import PackingInstance, require_feasible


@dataclass(frozen=True)
class TightSet:
    """``vertices is None`` is the whole-vertex-set sentinel.

    The sentinel stands for "no tight set contains the anchor arc" and is
    treated as containing every arc.
    """

    anchor: Arc
    vertices: Optional[frozenset[int]]

    @property
    def is_whole(self) -> bool:
        return self.vertices is None

    def contains(self, e: Arc) -> bool:
        if self.vertices is None:
            return True
        return e.tail in self.vertices and e.head in self.vertices

    def __repr__(self) -> str:
        body = "V" if self.vertices is None else sorted(self.vertices)
        return f"TightSet(f={self.anchor.id}, X={body})"


def minimal_tight_set(
    inst: PackingInstance, S: AbstractSet[int], f: int, *, check: bool = True
) -> TightSet:
    """Inclusion-minimal tight set w.r.t. ``S`` containing arc ``f``.

    One min-cut computation from the root to ``{head(f), tail(f)}`` with the
    flow capped at ``k``.  ``check=False`` skips the feasibility check of
    ``S`` for callers that already verified it.
    """
    if check:
        require_feasible(inst, S)
    arc = inst.digraph.arcs[f]
    r = inst.root
    if arc.tail == r or arc.head == r:
        return TightSet(arc, None)
    res = max_flow_min_cut(inst.digraph, S, r, {arc.tail, arc.head}, inst.k)
    if res.exceeded:
        return TightSet(arc, None)
    if res.flow_value < inst.k:
        raise ValueError("arc set violates the cut condition")
    return TightSet(arc, res.sink_side)


def is_tight(inst: PackingInstance, S: AbstractSet[int], X: AbstractSet[int]) -> bool:
    if not X:
        raise ValueError("tight sets are nonempty")
    if inst.root in X:
        raise ValueError("tight sets avoid the root")
    return count_in(inst.digraph, S, X) == inst.k
