"""Unit-capacity max-flow / min-cut by BFS augmenting paths.

Every flow value the rest of the package needs is bounded by ``k + 1``, so a
plain augmenting-path search with an early stop is enough.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import AbstractSet, Optional

from .digraph import Digraph


@dataclass(frozen=True)
class CutResult:
    """Outcome of :func:`max_flow_min_cut`.

    When the flow exceeded ``cap_limit`` the search stopped early: ``flow_value``
    is ``cap_limit + 1`` and ``sink_side``/``cut_arcs`` are ``None``.
    """

    flow_value: int
    sink_side: Optional[frozenset[int]]
    cut_arcs: Optional[tuple[int, ...]]

    @property
    def exceeded(self) -> bool:
        return self.sink_side is None


def max_flow_min_cut(
    D: Digraph,
    F: AbstractSet[int],
    source: int,
    sinks: AbstractSet[int],
    cap_limit: int,
) -> CutResult:
    """Max flow from ``source`` to the sink set through the arcs of ``F``.

    The sink set acts as one contracted vertex.  If the flow value stays at or
    below ``cap_limit`` the returned sink side is the set of vertices that can
    reach a sink in the residual graph, i.e. the sink side of the
    inclusion-minimal minimum cut.
    """
    n = D.n
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range")
    sinks = frozenset(sinks)
    if not sinks:
        raise ValueError("sink set must be nonempty")
    if any(not 0 <= t < n for t in sinks):
        raise ValueError(f"sink ids out of range: {sorted(sinks)}")
    if source in sinks:
        raise ValueError("source must not be a sink")
    if cap_limit < 1:
        raise ValueError("cap_limit must be at least 1")

    arcs = D.arcs
    out_adj: list[list[int]] = [[] for _ in range(n)]
    in_adj: list[list[int]] = [[] for _ in range(n)]
    for a in sorted(F):
        t, h = arcs[a].tail, arcs[a].head
        if t == h:
            continue
        out_adj[t].append(a)
        in_adj[h].append(a)
    used = set()

    flow = 0
    while True:
        # BFS in the residual graph; sinks are absorbing.
        parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
        queue = deque([source])
        reached = -1
        while queue and reached < 0:
            u = queue.popleft()
            for a in out_adj[u]:
                if a in used:
                    continue
                w = arcs[a].head
                if w not in parent:
                    parent[w] = (u, a)
                    if w in sinks:
                        reached = w
                        break
                    queue.append(w)
            if reached >= 0:
                break
            for a in in_adj[u]:
                if a not in used:
                    continue
                w = arcs[a].tail
                if w not in parent:
                    parent[w] = (u, a)
                    if w in sinks:
                        reached = w
                        break
                    queue.append(w)
        if reached < 0:
            break
        v = reached
        while v != source:
            u, a = parent[v]
            if a in used:
                used.discard(a)
            else:
                used.add(a)
            v = u
        flow += 1
        if flow > cap_limit:
            return CutResult(cap_limit + 1, None, None)

    # Vertices that can still reach the sink set in the residual graph.
    side = set(sinks)
    queue = deque(sinks)
    while queue:
        w = queue.popleft()
        for a in in_adj[w]:
            if a not in used:
                u = arcs[a].tail
                if u not in side:
                    side.add(u)
                    queue.append(u)
        for a in out_adj[w]:
            if a in used:
                u = arcs[a].head
                if u not in side:
                    side.add(u)
                    queue.append(u)
    assert source not in side
    cut = tuple(a for a in sorted(F) if arcs[a].head in side and arcs[a].tail not in side)
    assert len(cut) == flow, (flow, cut)
    return CutResult(flow, frozenset(side), cut)
