"""Feasibility of k-arborescence packings and decomposition into arborescences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Callable, Optional, Sequence, Union

from .digraph import Digraph, indegrees
from .maxflow import max_flow_min_cut


class InfeasibleError(ValueError):
    """Raised when an operation needs a feasible arc set and did not get one."""

    def __init__(self, verdict: "FeasibilityVerdict", what: str = "arc set") -> None:
        super().__init__(f"{what} is infeasible: {verdict.violation}")
        self.verdict = verdict


@dataclass(frozen=True)
class PackingInstance:
    digraph: Digraph
    k: int
    root: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if not 0 <= self.root < self.digraph.n:
            raise ValueError(f"root {self.root} is not a vertex")

    @classmethod
    def of(cls, D: Digraph, k: int) -> "PackingInstance":
        if D.root is None:
            raise ValueError("digraph has no root")
        return cls(D, k, D.root)

    @property
    def target_size(self) -> int:
        return self.k * (self.digraph.n - 1)


@dataclass(frozen=True)
class DegreeViolation:
    vertex: int
    indegree: int
    expected: int


@dataclass(frozen=True)
class CutViolation:
    """``len(arcs) < required``, where ``arcs`` are the arcs entering ``vertices``."""

    vertices: frozenset[int]
    arcs: tuple[int, ...]
    required: int


@dataclass(frozen=True)
class SizeViolation:
    size: int
    expected: int


Violation = Union[DegreeViolation, CutViolation, SizeViolation]


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    violation: Optional[Violation] = None

    def __bool__(self) -> bool:
        return self.feasible


def certificate_holds(D: Digraph, F: AbstractSet[int], violation: Violation) -> bool:
    """Check in linear time that ``violation`` really is violated by ``F``."""
    if isinstance(violation, DegreeViolation):
        return (
            sum(1 for a in F if D.head(a) == violation.vertex) == violation.indegree
            and violation.indegree != violation.expected
        )
    if isinstance(violation, CutViolation):
        X = violation.vertices
        entering = tuple(sorted(a for a in F if D.head(a) in X and D.tail(a) not in X))
        return bool(X) and entering == violation.arcs and len(entering) < violation.required
    return len(F) == violation.size and violation.size != violation.expected


def check_feasible(inst: PackingInstance, S: AbstractSet[int]) -> FeasibilityVerdict:
    """Decide ``S`` in F_{k,r} via Edmonds' degree and cut conditions."""
    D, k, r = inst.digraph, inst.k, inst.root
    if any(not 0 <= a < D.m for a in S):
        raise ValueError("arc id out of range")
    deg = indegrees(D, S)
    if deg[r] != 0:
        return FeasibilityVerdict(False, DegreeViolation(r, deg[r], 0))
    for v in range(D.n):
        if v != r and deg[v] != k:
            return FeasibilityVerdict(False, DegreeViolation(v, deg[v], k))
    for v in range(D.n):
        if v == r:
            continue
        res = max_flow_min_cut(D, S, r, {v}, k)
        if res.flow_value < k:
            return FeasibilityVerdict(False, CutViolation(res.sink_side, res.cut_arcs, k))
    return FeasibilityVerdict(True)


def require_feasible(inst: PackingInstance, S: AbstractSet[int], what: str = "arc set") -> None:
    verdict = check_feasible(inst, S)
    if not verdict:
        raise InfeasibleError(verdict, what)


def is_arborescence(D: Digraph, part: AbstractSet[int], root: Optional[int]) -> bool:
    """Acyclic, spanning, indegree one everywhere except the root.

    With ``root=None`` any vertex may serve as the root.
    """
    n = D.n
    if len(part) != n - 1:
        return False
    parent = [-1] * n
    for a in part:
        t, h = D.tail(a), D.head(a)
        if parent[h] != -1 or t == h:
            return False
        parent[h] = t
    roots = [v for v in range(n) if parent[v] == -1]
    if len(roots) != 1 or (root is not None and roots[0] != root):
        return False
    # n-1 arcs, one parent each, one root: spanning iff every vertex reaches the root.
    for v in range(n):
        seen = 0
        u = v
        while parent[u] != -1:
            u = parent[u]
            seen += 1
            if seen > n:
                return False
    return True


def verify_decomposition(
    D: Digraph, k: int, root: Optional[int], parts: Sequence[AbstractSet[int]]
) -> bool:
    """True iff ``parts`` are ``k`` pairwise disjoint arborescences of ``D``."""
    if len(parts) != k:
        return False
    seen: set[int] = set()
    for part in parts:
        if seen & set(part):
            return False
        seen |= set(part)
        if not is_arborescence(D, part, root):
            return False
    return True


def _residual_ok(D: Digraph, pool: AbstractSet[int], root: int, need: int) -> bool:
    if need == 0:
        return True
    return all(
        max_flow_min_cut(D, pool, root, {v}, need).flow_value >= need
        for v in range(D.n)
        if v != root
    )


def _extract(
    D: Digraph,
    k: int,
    root: int,
    pool: AbstractSet[int],
    choose: Callable[[list[int]], list[int]],
) -> list[frozenset[int]]:
    """Peel ``k`` arc-disjoint arborescences off ``pool`` (Lovász's argument).

    ``pool`` must satisfy the rooted k-cut condition.  An arc leaving the
    current partial arborescence is committed only when the leftover pool
    still has ``k - 1`` arc-disjoint paths from the root to every vertex.
    ``choose`` orders the candidate arcs.
    """
    parts: list[frozenset[int]] = []
    remaining = set(pool)
    for level in range(k, 0, -1):
        reached = {root}
        part: set[int] = set()
        while len(reached) < D.n:
            candidates = [a for a in remaining if D.tail(a) in reached and D.head(a) not in reached]
            for a in choose(candidates):
                remaining.discard(a)
                if _residual_ok(D, remaining, root, level - 1):
                    part.add(a)
                    reached.add(D.head(a))
                    break
                remaining.add(a)
            else:
                raise RuntimeError("no committable arc; pool violates the cut condition")
        parts.append(frozenset(part))
    return parts


def decompose(inst: PackingInstance, S: AbstractSet[int]) -> list[frozenset[int]]:
    """Split a feasible ``S`` into ``k`` arc-disjoint root-arborescences.

    Ties between committable arcs go to the lowest arc id.
    """
    require_feasible(inst, S)
    parts = _extract(inst.digraph, inst.k, inst.root, S, sorted)
    assert frozenset().union(*parts) == frozenset(S)
    assert verify_decomposition(inst.digraph, inst.k, inst.root, parts)
    return parts
