"""Explicit basis families on tiny ground sets, and the common-basis exchange graph.

Used to reproduce the matroid pair whose common bases are reconfigurable
while the common bases of the 2-fold unions are not.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

GROUND = ("a", "b", "c1", "c2", "c3", "d1", "d2", "d3")
C = frozenset({"c1", "c2", "c3"})
D = frozenset({"d1", "d2", "d3"})


@dataclass(frozen=True)
class BasisFamily:
    ground: tuple[str, ...]
    bases: frozenset[frozenset[str]]

    def __post_init__(self) -> None:
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground set has repeated names")
        if not self.bases:
            raise ValueError("a matroid has at least one basis")
        if len({len(B) for B in self.bases}) != 1:
            raise ValueError("bases differ in size")
        stray = frozenset().union(*self.bases) - frozenset(self.ground)
        if stray:
            raise ValueError(f"bases use elements outside the ground set: {sorted(stray)}")

    @property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    def __contains__(self, B: Iterable[str]) -> bool:
        return frozenset(B) in self.bases

    def __len__(self) -> int:
        return len(self.bases)

    @classmethod
    def from_predicate(
        cls, ground: tuple[str, ...], rank: int, pred: Callable[[frozenset[str]], bool]
    ) -> "BasisFamily":
        return cls(
            ground, frozenset(B for B in map(frozenset, combinations(ground, rank)) if pred(B))
        )


def satisfies_exchange_axiom(M: BasisFamily) -> bool:
    """For all bases B1, B2 and x in B1 - B2 some y in B2 - B1 has B1 - x + y a basis."""
    for B1 in M.bases:
        for B2 in M.bases:
            for x in B1 - B2:
                if not any((B1 - {x}) | {y} in M.bases for y in B2 - B1):
                    return False
    return True


def build_M1() -> BasisFamily:
    return BasisFamily.from_predicate(GROUND, 3, lambda B: len(B & C) <= 1 and len(B & D) <= 1)


def build_M2() -> BasisFamily:
    return BasisFamily.from_predicate(GROUND, 3, lambda B: len(B & {"a", "c1", "d1"}) == 1)


def common_bases(Mx: BasisFamily, My: BasisFamily) -> frozenset[frozenset[str]]:
    if Mx.ground != My.ground:
        raise ValueError("matroids live on different ground sets")
    if Mx.rank != My.rank:
        raise ValueError(f"rank mismatch: {Mx.rank} vs {My.rank}")
    return Mx.bases & My.bases


def k_fold_union(M: BasisFamily, k: int) -> BasisFamily:
    """Bases of kM: unions of ``k`` pairwise disjoint bases of M."""
    if k < 1:
        raise ValueError("k must be positive")
    unions = set()
    for group in combinations(sorted(M.bases, key=sorted), k):
        if sum(map(len, group)) == len(frozenset().union(*group)):
            unions.add(frozenset().union(*group))
    if not unions:
        raise ValueError(f"matroid has no {k} pairwise disjoint bases")
    return BasisFamily(M.ground, frozenset(unions))


@dataclass(frozen=True)
class RCBResult:
    """Outcome of the common-basis reconfigurability check.

    ``components`` lists the connected components of the exchange graph on
    common bases, each sorted; ``witness`` holds one representative from each
    of the first two components when the graph is disconnected.
    """

    holds: bool
    components: tuple[tuple[frozenset[str], ...], ...]

    @property
    def witness(self) -> tuple[frozenset[str], frozenset[str]] | None:
        if self.holds:
            return None
        return self.components[0][0], self.components[1][0]


def _canon(B: frozenset[str]) -> tuple[str, ...]:
    return tuple(sorted(B))


def exchange_components(family: Iterable[frozenset[str]]) -> list[list[frozenset[str]]]:
    nodes = sorted(family, key=_canon)
    seen: set[int] = set()
    comps = []
    for s in range(len(nodes)):
        if s in seen:
            continue
        seen.add(s)
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for j, B in enumerate(nodes):
                if j not in seen and len(nodes[u] - B) == 1:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        comps.append(sorted((nodes[i] for i in comp), key=_canon))
    return comps


def rcb_holds(Mx: BasisFamily, My: BasisFamily) -> RCBResult:
    common = common_bases(Mx, My)
    if not common:
        raise ValueError("no common bases")
    comps = exchange_components(common)
    return RCBResult(len(comps) == 1, tuple(tuple(c) for c in comps))


def is_exchange_path(path: list[frozenset[str]], family: Iterable[frozenset[str]]) -> bool:
    members = set(family)
    return all(B in members for B in path) and all(
        len(B - B2) == 1 == len(B2 - B) for B, B2 in zip(path, path[1:])
    )


def _s(*names: str) -> frozenset[str]:
    return frozenset(names)


def closed_form_common_bases() -> frozenset[frozenset[str]]:
    """The twelve common bases of (M1, M2), written out by pattern (i, j in {2, 3})."""
    out = set()
    for i in ("2", "3"):
        out.add(_s("a", "b", "c" + i))
        out.add(_s("a", "b", "d" + i))
        out.add(_s("b", "c1", "d" + i))
        out.add(_s("b", "c" + i, "d1"))
        for j in ("2", "3"):
            out.add(_s("a", "c" + i, "d" + j))
    return frozenset(out)


def closed_form_2fold_common_bases() -> frozenset[frozenset[str]]:
    """The four common bases of (2M1, 2M2)."""
    return frozenset(
        [_s("a", "b", "c1", "c" + i, "d2", "d3") for i in ("2", "3")]
        + [_s("a", "b", "c2", "c3", "d1", "d" + j) for j in ("2", "3")]
    )


def anchor_path(i: int, j: int) -> list[frozenset[str]]:
    """Exchange path from {b, c1, d2} through all common bases indexed by ``i, j``.

    The last term is {b, ci, d1}; consecutive repeats (when ``j == 2``) are
    dropped.
    """
    if i not in (2, 3) or j not in (2, 3):
        raise ValueError("i and j range over {2, 3}")
    ci, dj = f"c{i}", f"d{j}"
    raw = [
        _s("b", "c1", "d2"),
        _s("b", "c1", dj),
        _s("a", "b", dj),
        _s("a", ci, dj),
        _s("a", "b", ci),
        _s("b", ci, "d1"),
    ]
    return [B for t, B in enumerate(raw) if t == 0 or B != raw[t - 1]]


def fmt_set(B: Iterable[str]) -> str:
    return "{" + ",".join(sorted(B)) + "}"


def demo_report() -> tuple[list[str], bool]:
    """Human-readable verification of both matroid pairs and an overall verdict."""
    M1, M2 = build_M1(), build_M2()
    lines = [f"M1: {len(M1)} bases of rank {M1.rank}; M2: {len(M2)} bases of rank {M2.rank}"]
    common = common_bases(M1, M2)
    res = rcb_holds(M1, M2)
    state = "connected" if res.holds else f"{len(res.components)} components"
    lines.append(f"(M1, M2): {len(common)} common bases, exchange graph {state}")
    lines.extend("  " + fmt_set(B) for B in sorted(common, key=_canon))
    paths_ok = all(is_exchange_path(anchor_path(i, j), common) for i in (2, 3) for j in (2, 3))
    covered = {B for i in (2, 3) for j in (2, 3) for B in anchor_path(i, j)}
    lines.append(
        f"  paths from {{b,c1,d2}} valid: {paths_ok}; cover all common bases: {covered == common}"
    )

    K1, K2 = k_fold_union(M1, 2), k_fold_union(M2, 2)
    lines.append(f"2M1: {len(K1)} bases of rank {K1.rank}; 2M2: {len(K2)} bases of rank {K2.rank}")
    common2 = common_bases(K1, K2)
    res2 = rcb_holds(K1, K2)
    state2 = "connected" if res2.holds else f"{len(res2.components)} components"
    lines.append(f"(2M1, 2M2): {len(common2)} common bases, exchange graph {state2}")
    for c, comp in enumerate(res2.components):
        lines.append(f"  component {c}: " + " ".join(fmt_set(B) for B in comp))
    cross = {len(B - B2) for a, b in combinations(res2.components, 2) for B in a for B2 in b}
    if res2.witness is not None:
        B, B2 = res2.witness
        lines.append(f"  witness: {fmt_set(B)} and {fmt_set(B2)} are not reconfigurable")
    lines.append(f"  cross-component differences: {sorted(cross)}")
    ok = (
        len(common) == 12
        and common == closed_form_common_bases()
        and res.holds
        and paths_ok
        and covered == common
        and len(common2) == 4
        and common2 == closed_form_2fold_common_bases()
        and len(res2.components) == 2
        and cross == {2}
    )
    lines.append("verdict: " + ("reproduced" if ok else "MISMATCH"))
    return lines, ok
