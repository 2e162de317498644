"""Random instances with two known feasible arc sets."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .digraph import Digraph

Pair = tuple[int, int]


def random_arborescence(rng: random.Random, n: int, root: int) -> list[Pair]:
    """Random spanning arborescence of the complete digraph, as (tail, head) pairs."""
    order = [v for v in range(n) if v != root]
    rng.shuffle(order)
    seen = [root]
    arcs = []
    for v in order:
        arcs.append((rng.choice(seen), v))
        seen.append(v)
    return arcs


def random_packing_pairs(rng: random.Random, n: int, k: int, root: Optional[int]) -> list[Pair]:
    """Union of ``k`` random arborescences; random roots when ``root`` is None."""
    out: list[Pair] = []
    for _ in range(k):
        out.extend(random_arborescence(rng, n, rng.randrange(n) if root is None else root))
    return out


def merge_pools(*multisets: Sequence[Pair]) -> tuple[list[Pair], list[list[int]]]:
    """Smallest arc pool containing each multiset; returns the pool and each
    multiset's arc positions in it."""
    pool: list[Pair] = []
    placements: list[list[int]] = []
    for ms in multisets:
        free = list(range(len(pool)))
        ids = []
        for pair in ms:
            hit = next((i for i in free if pool[i] == pair), None)
            if hit is None:
                pool.append(pair)
                hit = len(pool) - 1
            else:
                free.remove(hit)
            ids.append(hit)
        placements.append(ids)
    return pool, placements


@dataclass(frozen=True)
class GeneratedInstance:
    digraph: Digraph
    k: int
    S: frozenset[int]
    T: frozenset[int]

    @property
    def root(self) -> Optional[int]:
        return self.digraph.root


def generate_instance(
    n: int,
    k: int,
    seed: int,
    extra_arcs: int = 0,
    *,
    multiroot: bool = False,
    root: int = 0,
) -> GeneratedInstance:
    """Two independent random packings over a shared pool plus random extra arcs.

    Arc ids are shuffled so that id order carries no information about S or T.
    Deterministic given the arguments.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    r = None if multiroot else root
    S_pairs = random_packing_pairs(rng, n, k, r)
    T_pairs = random_packing_pairs(rng, n, k, r)
    pool, (S_ids, T_ids) = merge_pools(S_pairs, T_pairs)
    if n > 1:
        for _ in range(extra_arcs):
            u, v = rng.sample(range(n), 2)
            pool.append((u, v))
    perm = list(range(len(pool)))
    rng.shuffle(perm)
    arcs = [None] * len(pool)
    for old, new in enumerate(perm):
        arcs[new] = pool[old]
    D = Digraph.from_pairs(n, arcs, r)  # type: ignore[arg-type]
    return GeneratedInstance(
        D, k, frozenset(perm[i] for i in S_ids), frozenset(perm[i] for i in T_ids)
    )


def restrict(D: Digraph, keep: Sequence[int]) -> tuple[Digraph, dict[int, int]]:
    """Subdigraph on the arcs ``keep`` (renumbered in ascending order) and the id map."""
    ids = sorted(set(keep))
    mapping = {a: i for i, a in enumerate(ids)}
    return Digraph.from_pairs(D.n, [(D.tail(a), D.head(a)) for a in ids], D.root), mapping
