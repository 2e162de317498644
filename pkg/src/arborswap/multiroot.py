"""Unions of k arborescences with arbitrary roots (the family F_k).

A new super-root ``r^`` is added with ``k`` parallel synthetic arcs to every
vertex.  The hat of an arc set ``A`` (every indegree at most ``k``) tops up
each vertex to indegree ``k`` with synthetic arcs, and ``A`` is in F_k exactly
when its hat uses ``k`` synthetic arcs and packs ``k`` arborescences rooted at
``r^``.  Reconfiguration first matches the per-vertex indegrees of the
target by direct swaps, then runs the rooted algorithm on the hats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import AbstractSet, Optional

from .audit import LemmaAudit
from .digraph import Arc, Digraph, indegrees
from .packing import (
    CutViolation,
    DegreeViolation,
    FeasibilityVerdict,
    InfeasibleError,
    PackingInstance,
    SizeViolation,
    check_feasible,
    decompose,
)
from .reconfig import (
    LemmaViolation,
    ReconfigSequence,
    ReconfigStep,
    StepKind,
    length_bound,
    reconfigure,
    verify_walk,
)
from .tightset import minimal_tight_set


@dataclass(frozen=True)
class HatInstance:
    base: Digraph
    k: int

    @property
    def hat_root(self) -> int:
        return self.base.n

    @cached_property
    def digraph(self) -> Digraph:
        D, k = self.base, self.k
        arcs = list(D.arcs)
        for v in range(D.n):
            for _ in range(k):
                arcs.append(Arc(len(arcs), D.n, v))
        return Digraph(D.n + 1, tuple(arcs), D.n)

    @cached_property
    def rooted(self) -> PackingInstance:
        return PackingInstance(self.digraph, self.k, self.hat_root)

    def hat_arcs(self, v: int) -> range:
        """Ids of the ``k`` synthetic arcs ``r^ -> v``."""
        start = self.base.m + v * self.k
        return range(start, start + self.k)

    def is_synthetic(self, a: int) -> bool:
        return a >= self.base.m

    def hat(self, A: AbstractSet[int]) -> frozenset[int]:
        deg = indegrees(self.base, A)
        extra: list[int] = []
        for v, d in enumerate(deg):
            if d > self.k:
                raise ValueError(f"vertex {v} has indegree {d} > k = {self.k}")
            extra.extend(self.hat_arcs(v)[: self.k - d])
        return frozenset(A) | frozenset(extra)

    def project(self, A_hat: AbstractSet[int]) -> frozenset[int]:
        return frozenset(a for a in A_hat if a < self.base.m)


def check_feasible_multiroot(k: int, D: Digraph, A: AbstractSet[int]) -> FeasibilityVerdict:
    """Decide membership of ``A`` in F_k; certificates refer to base arcs only.

    A cut certificate ``(X, arcs, required)`` states that only ``len(arcs)``
    base arcs enter ``X`` while ``k - sum_{v in X} (k - indeg_A(v))`` are needed.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    deg = indegrees(D, A)
    for v, d in enumerate(deg):
        if d > k:
            return FeasibilityVerdict(False, DegreeViolation(v, d, k))
    expected = k * (D.n - 1)
    if len(A) != expected:
        return FeasibilityVerdict(False, SizeViolation(len(A), expected))
    H = HatInstance(D, k)
    verdict = check_feasible(H.rooted, H.hat(A))
    if verdict:
        return verdict
    cut = verdict.violation
    assert isinstance(cut, CutViolation), cut
    base_arcs = tuple(a for a in cut.arcs if not H.is_synthetic(a))
    synthetic = len(cut.arcs) - len(base_arcs)
    return FeasibilityVerdict(False, CutViolation(cut.vertices, base_arcs, k - synthetic))


def require_feasible_multiroot(k: int, D: Digraph, A: AbstractSet[int], what: str) -> None:
    verdict = check_feasible_multiroot(k, D, A)
    if not verdict:
        raise InfeasibleError(verdict, what)


def decompose_multiroot(k: int, D: Digraph, A: AbstractSet[int]) -> list[frozenset[int]]:
    """Split ``A`` in F_k into ``k`` arc-disjoint arborescences of ``D``."""
    require_feasible_multiroot(k, D, A, "arc set")
    H = HatInstance(D, k)
    return [H.project(part) for part in decompose(H.rooted, H.hat(A))]


def rebalance_roots(
    k: int, D: Digraph, S: AbstractSet[int], T: AbstractSet[int]
) -> tuple[list[ReconfigStep], frozenset[int]]:
    """Swap arcs until every indegree agrees with ``T``.

    Each swap trades an arc of ``S - T`` for one of ``T - S``, so the loop
    runs at most ``|S - T|`` times.
    """
    S, T = frozenset(S), frozenset(T)
    H = HatInstance(D, k)
    steps: list[ReconfigStep] = []
    deg_t = indegrees(D, T)
    while True:
        deg_s = indegrees(D, S)
        if deg_s == deg_t:
            return steps, S
        v = min(w for w in range(D.n) if deg_s[w] < deg_t[w])
        f = min(a for a in D.in_arcs(v) if a in T and a not in S)
        X = minimal_tight_set(H.rooted, H.hat(S), f, check=False)
        if X.vertices is None:
            raise LemmaViolation(f"no tight set of the hat contains arc {f}")
        inside = [a for a in sorted(S - T) if X.contains(D.arcs[a])]
        if not inside:
            raise LemmaViolation(f"tight set {sorted(X.vertices)} contains no arc of S - T")
        e = inside[0]
        S = (S - {e}) | {f}
        verdict = check_feasible_multiroot(k, D, S)
        if not verdict:
            raise LemmaViolation(f"rebalancing swap -{e} +{f} is infeasible: {verdict.violation}")
        steps.append(ReconfigStep(e, f, StepKind.REBALANCE))


def reconfigure_multiroot(
    k: int,
    D: Digraph,
    S: AbstractSet[int],
    T: AbstractSet[int],
    audit: Optional[LemmaAudit] = None,
) -> ReconfigSequence:
    """A reconfiguration sequence from ``S`` to ``T`` inside F_k (base arcs only)."""
    S, T = frozenset(S), frozenset(T)
    require_feasible_multiroot(k, D, S, "S")
    require_feasible_multiroot(k, D, T, "T")
    seq = ReconfigSequence(S)
    rebalance, S_m = rebalance_roots(k, D, S, T)
    for step in rebalance:
        seq.append(step)

    H = HatInstance(D, k)
    S_hat, T_hat = H.hat(S_m), H.hat(T)
    synthetic = frozenset(a for a in S_hat if H.is_synthetic(a))
    assert synthetic == frozenset(a for a in T_hat if H.is_synthetic(a))
    rooted = reconfigure(H.rooted, S_hat, T_hat, audit)
    for state in rooted.states():
        ok = synthetic <= state and state <= S_hat | T_hat
        if audit is not None:
            audit.record("hat_state_projects", ok)
        if not ok:
            raise LemmaViolation("rooted phase left the hat family")
    for step, trace in zip(rooted.steps, rooted.traces):
        if H.is_synthetic(step.remove) or H.is_synthetic(step.add):
            raise LemmaViolation(f"rooted phase touched a synthetic arc: {step}")
        seq.append(step, trace)

    bound = length_bound(len(S - T), k)
    if len(seq) > bound:
        raise LemmaViolation(f"sequence length {len(seq)} exceeds bound {bound}")
    if audit is not None:
        audit.record("length_bound", len(seq) <= bound, (len(seq), bound))
    return seq


def verify_sequence_multiroot(
    k: int, D: Digraph, S: AbstractSet[int], T: AbstractSet[int], seq: ReconfigSequence
) -> bool:
    return verify_walk(
        S, T, seq.start, seq.steps, lambda F: check_feasible_multiroot(k, D, F).feasible
    )
