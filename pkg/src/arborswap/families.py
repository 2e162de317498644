"""Instance batteries: exhaustive small families and seeded random draws."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional

from .digraph import Digraph
from .generate import generate_instance


@dataclass(frozen=True)
class BatteryInstance:
    digraph: Digraph
    k: int
    label: str
    S: Optional[frozenset[int]] = None
    T: Optional[frozenset[int]] = None


def _canonical(n: int, pairs: list[tuple[int, int]], mult: tuple[int, ...], fixed: int) -> bool:
    """True iff ``mult`` is lexicographically smallest among its relabellings.

    Vertices below ``fixed`` keep their labels.
    """
    index = {p: i for i, p in enumerate(pairs)}
    movable = list(range(fixed, n))
    for perm in permutations(movable):
        relabel = list(range(fixed)) + list(perm)
        image = [0] * len(pairs)
        for (u, v), c in zip(pairs, mult):
            image[index[(relabel[u], relabel[v])]] = c
        if tuple(image) < mult:
            return False
    return True


def exhaustive_family(
    n: int, k: int, max_arcs: int, *, rooted: bool = True, min_arcs: int = 0
) -> Iterator[Digraph]:
    """Loopless multidigraphs on ``n`` vertices, one per isomorphism class.

    Each ordered pair carries at most ``k`` parallel arcs (more are never
    used together by a packing).  When ``rooted``, vertex 0 is the root,
    has no entering arcs and is fixed by the isomorphisms.
    """
    if rooted:
        pairs = [(u, v) for v in range(1, n) for u in range(n) if u != v]
    else:
        pairs = [(u, v) for v in range(n) for u in range(n) if u != v]
    fixed = 1 if rooted else 0

    def rec(i: int, used: int, mult: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(pairs):
            yield tuple(mult)
            return
        for c in range(min(k, max_arcs - used) + 1):
            mult.append(c)
            yield from rec(i + 1, used + c, mult)
            mult.pop()

    for mult in rec(0, 0, []):
        if sum(mult) < min_arcs or not _canonical(n, pairs, mult, fixed):
            continue
        arcs = [p for p, c in zip(pairs, mult) for _ in range(c)]
        yield Digraph.from_pairs(n, arcs, 0 if rooted else None)


def exhaustive_battery(
    k: int, *, n_max: int = 4, max_arcs: int = 10, rooted: bool = True
) -> list[BatteryInstance]:
    """All classes with ``n <= n_max`` that can hold a packing at all.

    Digraphs with fewer than ``k(n-1)`` arcs have empty families and are
    skipped.
    """
    out = []
    for n in range(1, n_max + 1):
        need = k * (n - 1)
        for D in exhaustive_family(n, k, max_arcs, rooted=rooted, min_arcs=need):
            out.append(BatteryInstance(D, k, f"exhaustive n={n} k={k} arcs={D.m}"))
    return out


def random_battery(
    count: int,
    k: int,
    *,
    seed: int = 0,
    n_range: tuple[int, int] = (2, 5),
    extra_range: tuple[int, int] = (0, 3),
    max_arcs: int = 16,
    multiroot: bool = False,
) -> list[BatteryInstance]:
    """``count`` generated instances whose arc count fits the oracle budget."""
    rng = random.Random(seed)
    out: list[BatteryInstance] = []
    while len(out) < count:
        n = rng.randint(*n_range)
        extra = rng.randint(*extra_range)
        s = rng.randrange(2**32)
        g = generate_instance(n, k, s, extra, multiroot=multiroot)
        if g.digraph.m > max_arcs:
            continue
        out.append(BatteryInstance(g.digraph, k, f"random n={n} k={k} seed={s}", g.S, g.T))
    return out


def sample_pairs(
    nodes: list[frozenset[int]], limit: int, seed: int = 0
) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All ordered pairs of distinct nodes, or a seeded sample of ``limit`` of them."""
    total = len(nodes) * (len(nodes) - 1)
    if total <= limit:
        return [(S, T) for S, T in product(nodes, nodes) if S != T]
    rng = random.Random(seed)
    out = []
    while len(out) < limit:
        i, j = rng.sample(range(len(nodes)), 2)
        out.append((nodes[i], nodes[j]))
    return out
