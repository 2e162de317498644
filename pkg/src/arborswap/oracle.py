"""Brute-force ground truth on tiny instances.

Nothing here touches the flow engine: membership in F_{k,r} (``root`` given)
or F_k (``root=None``) is decided by searching over all ways to colour the
arcs into ``k`` classes and checking each class is an arborescence.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import AbstractSet, Iterator, Optional

from .digraph import Digraph
from .generate import merge_pools, random_packing_pairs, restrict
from .packing import verify_decomposition

DEFAULT_MAX_ARCS = 12


class BudgetExceeded(ValueError):
    pass


def _check_budget(D: Digraph, max_arcs: int) -> None:
    if D.m > max_arcs:
        raise BudgetExceeded(f"{D.m} arcs exceed the enumeration budget of {max_arcs}")


def find_decomposition(
    D: Digraph, k: int, root: Optional[int], F: AbstractSet[int]
) -> Optional[list[frozenset[int]]]:
    """Exhaustive search for ``k`` arc-disjoint arborescences partitioning ``F``.

    Every vertex has at most one in-arc per class, so it suffices to try each
    injective assignment of a vertex's in-arcs to the classes.
    """
    n = D.n
    if len(F) != k * (n - 1):
        return None
    by_head: list[list[int]] = [[] for _ in range(n)]
    for a in sorted(F):
        by_head[D.head(a)].append(a)
    if any(len(ins) > k for ins in by_head):
        return None
    if root is not None and by_head[root]:
        return None
    choices = [list(permutations(range(k), len(ins))) for ins in by_head]
    for assignment in product(*choices):
        parts: list[set[int]] = [set() for _ in range(k)]
        for ins, colours in zip(by_head, assignment):
            for a, c in zip(ins, colours):
                parts[c].add(a)
        frozen = [frozenset(p) for p in parts]
        if verify_decomposition(D, k, root, frozen):
            return frozen
    return None


def is_decomposable(D: Digraph, k: int, root: Optional[int], F: AbstractSet[int]) -> bool:
    return find_decomposition(D, k, root, F) is not None


def degree_profile_sets(D: Digraph, k: int, root: Optional[int]) -> Iterator[frozenset[int]]:
    """Arc sets with every indegree at most ``k`` (exactly ``k`` off-root when rooted)."""
    per_vertex = []
    for v in range(D.n):
        ins = D.in_arcs(v)
        if root is not None:
            sizes = [0] if v == root else [k]
        else:
            sizes = range(min(k, len(ins)) + 1)
        per_vertex.append([c for s in sizes for c in combinations(ins, s)])
    target = k * (D.n - 1)
    for combo in product(*per_vertex):
        if sum(map(len, combo)) == target:
            yield frozenset(a for c in combo for a in c)


def enumerate_feasible(
    D: Digraph, k: int, root: Optional[int], *, max_arcs: int = DEFAULT_MAX_ARCS
) -> list[frozenset[int]]:
    """All members of the family, sorted by their sorted arc-id tuples."""
    _check_budget(D, max_arcs)
    found = [F for F in degree_profile_sets(D, k, root) if is_decomposable(D, k, root, F)]
    return sorted(found, key=lambda F: tuple(sorted(F)))


@dataclass
class ExchangeGraph:
    """Feasible sets as nodes; edges join sets differing by a single exchange."""

    nodes: list[frozenset[int]]
    adj: list[list[int]]
    index: dict[frozenset[int], int] = field(repr=False)

    @classmethod
    def build(cls, nodes: list[frozenset[int]]) -> "ExchangeGraph":
        index = {F: i for i, F in enumerate(nodes)}
        buckets: dict[frozenset[int], list[int]] = {}
        for i, F in enumerate(nodes):
            for a in F:
                buckets.setdefault(F - {a}, []).append(i)
        adj: list[set[int]] = [set() for _ in nodes]
        for members in buckets.values():
            for i, j in combinations(members, 2):
                adj[i].add(j)
                adj[j].add(i)
        return cls(nodes, [sorted(s) for s in adj], index)

    def distances_from(self, S: AbstractSet[int]) -> list[float]:
        src = self.index[frozenset(S)]
        dist: list[float] = [math.inf] * len(self.nodes)
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] == math.inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance(self, S: AbstractSet[int], T: AbstractSet[int]) -> float:
        return self.distances_from(S)[self.index[frozenset(T)]]

    def components(self) -> list[list[frozenset[int]]]:
        seen = [False] * len(self.nodes)
        comps = []
        for s in range(len(self.nodes)):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append([self.nodes[i] for i in sorted(comp)])
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def exchange_graph(
    D: Digraph, k: int, root: Optional[int], *, max_arcs: int = DEFAULT_MAX_ARCS
) -> ExchangeGraph:
    return ExchangeGraph.build(enumerate_feasible(D, k, root, max_arcs=max_arcs))


def exchange_distance(
    D: Digraph,
    k: int,
    root: Optional[int],
    S: AbstractSet[int],
    T: AbstractSet[int],
    *,
    max_arcs: int = DEFAULT_MAX_ARCS,
) -> float:
    """Shortest exchange distance; ``math.inf`` when disconnected."""
    G = exchange_graph(D, k, root, max_arcs=max_arcs)
    for F, name in ((S, "S"), (T, "T")):
        if frozenset(F) not in G.index:
            raise ValueError(f"{name} is not feasible")
    return G.distance(S, T)


@dataclass(frozen=True)
class HardInstance:
    digraph: Digraph
    k: int
    S: frozenset[int]
    T: frozenset[int]
    distance: int

    @property
    def difference(self) -> int:
        return len(self.S - self.T)


def hard_pairs(
    D: Digraph, k: int, root: Optional[int], *, max_arcs: int = DEFAULT_MAX_ARCS
) -> list[HardInstance]:
    """All ordered pairs whose exchange distance exceeds ``|S - T|``."""
    G = exchange_graph(D, k, root, max_arcs=max_arcs)
    out = []
    for S in G.nodes:
        dist = G.distances_from(S)
        for T, d in zip(G.nodes, dist):
            if d > len(S - T):
                out.append(HardInstance(D, k, S, T, int(d) if d != math.inf else -1))
    return out


def find_hard(
    budget: int = 5000,
    *,
    k: int = 2,
    seed: int = 0,
    n_range: tuple[int, int] = (5, 6),
    max_difference: Optional[int] = None,
    limit: int = 1,
    max_arcs: int = 16,
) -> list[HardInstance]:
    """Randomized search for pairs needing more than ``|S - T|`` exchanges.

    Each trial draws two random packings rooted at vertex 0 and takes their
    union as the digraph, so every arc lies in ``S | T`` for the drawn pair.
    A witness is re-expressed on the subdigraph of its own ``S | T``:
    dropping arcs can only lengthen exchange distances, so it stays a witness.
    Stops after ``budget`` trials or ``limit`` witnesses.
    """
    rng = random.Random(seed)
    found: list[HardInstance] = []
    lo, hi = n_range
    for _ in range(budget):
        n = rng.randint(lo, hi)
        pool, _ids = merge_pools(
            random_packing_pairs(rng, n, k, 0), random_packing_pairs(rng, n, k, 0)
        )
        if len(pool) > max_arcs:
            continue
        D = Digraph.from_pairs(n, pool, 0)
        pairs = [
            h
            for h in hard_pairs(D, k, 0, max_arcs=max_arcs)
            if max_difference is None or h.difference <= max_difference
        ]
        if not pairs:
            continue
        best = min(pairs, key=lambda h: (h.difference, sorted(h.S), sorted(h.T)))
        sub, mapping = restrict(D, sorted(best.S | best.T))
        S = frozenset(mapping[a] for a in best.S)
        T = frozenset(mapping[a] for a in best.T)
        d = exchange_distance(sub, k, 0, S, T, max_arcs=max_arcs)
        assert d >= best.distance
        found.append(HardInstance(sub, k, S, T, int(d)))
        if len(found) >= limit:
            break
    return found
