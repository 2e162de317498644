"""Reconfiguration between two members of F_{k,r} by single arc exchanges.

Outline of one exchange, given current ``S`` and target ``T``:

* pair every arc of ``S - T`` with an arc of ``T - S`` entering the same vertex;
* for each pair ``(e_i, f_i)`` compute the minimal tight set ``X_i`` of ``f_i``;
* build the auxiliary digraph ``H`` on pair indices with ``i -> j`` whenever
  ``X_i`` contains ``e_j``, and take a shortest dicycle ``C`` of ``H``;
* a self-loop at ``i`` means ``S - e_i + f_i`` is feasible; otherwise ``f_1``
  (first vertex of ``C``) is swapped in for an arc ``f'_1`` of ``S`` entering
  ``head(f_1)`` from inside ``X_1 & Y`` where ``Y`` is the union of the other
  tight sets on ``C``.

When ``f'_1`` lies in ``S & T`` the difference does not shrink, but the next
auxiliary digraph has a strictly shorter dicycle, so at most ``min(p, k)``
exchanges are needed to reduce ``|S - T|`` by one.
"""

from __future__ import annotations

import enum
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, AbstractSet, Callable, Iterator, NamedTuple, Optional, Sequence

from .digraph import Digraph
from .packing import PackingInstance, check_feasible, require_feasible
from .tightset import TightSet, minimal_tight_set

if TYPE_CHECKING:
    from .audit import LemmaAudit


class LemmaViolation(RuntimeError):
    """An internal invariant that the theory guarantees has failed."""


class StepKind(str, enum.Enum):
    SELF_LOOP = "SelfLoopSwap"
    CASE_ONE = "CaseOneSwap"
    CASE_TWO = "CaseTwoSwap"
    REBALANCE = "RootRebalanceSwap"

    @property
    def reduces_difference(self) -> bool:
        return self is not StepKind.CASE_TWO


@dataclass(frozen=True)
class DiffPairing:
    """Bijection ``e_i <-> f_i`` between ``S - T`` and ``T - S`` with equal heads."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def p(self) -> int:
        return len(self.pairs)

    def e(self, i: int) -> int:
        return self.pairs[i][0]

    def f(self, i: int) -> int:
        return self.pairs[i][1]

    def replace_f(self, i: int, f: int) -> "DiffPairing":
        pairs = list(self.pairs)
        pairs[i] = (pairs[i][0], f)
        return DiffPairing(tuple(pairs))


def pair_differences(D: Digraph, S: AbstractSet[int], T: AbstractSet[int]) -> DiffPairing:
    """Pair ``S - T`` with ``T - S`` head by head, ascending arc id within a head.

    Pairs are listed by ascending id of their ``S``-side arc.
    """
    out_s: dict[int, list[int]] = defaultdict(list)
    out_t: dict[int, list[int]] = defaultdict(list)
    for a in sorted(set(S) - set(T)):
        out_s[D.head(a)].append(a)
    for a in sorted(set(T) - set(S)):
        out_t[D.head(a)].append(a)
    pairs = []
    for v in set(out_s) | set(out_t):
        es, fs = out_s.get(v, []), out_t.get(v, [])
        if len(es) != len(fs):
            raise ValueError(f"vertex {v} has {len(es)} arcs in S-T but {len(fs)} in T-S")
        pairs.extend(zip(es, fs))
    return DiffPairing(tuple(sorted(pairs)))


@dataclass(frozen=True)
class AuxDigraph:
    """Digraph on pair indices ``0..p-1``; self-loops allowed."""

    p: int
    succ: tuple[tuple[int, ...], ...]
    tight_sets: Optional[tuple[TightSet, ...]] = None

    @classmethod
    def from_arcs(cls, p: int, arcs: Sequence[tuple[int, int]]) -> "AuxDigraph":
        succ: list[set[int]] = [set() for _ in range(p)]
        for i, j in arcs:
            succ[i].add(j)
        return cls(p, tuple(tuple(sorted(s)) for s in succ))

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.p) for j in self.succ[i]]

    def has_arc(self, i: int, j: int) -> bool:
        return j in self.succ[i]


def build_aux_digraph(
    inst: PackingInstance, S: AbstractSet[int], T: AbstractSet[int], pairing: DiffPairing
) -> AuxDigraph:
    D = inst.digraph
    tight = tuple(minimal_tight_set(inst, S, f, check=False) for _, f in pairing.pairs)
    succ = tuple(
        tuple(j for j in range(pairing.p) if X.contains(D.arcs[pairing.e(j)])) for X in tight
    )
    return AuxDigraph(pairing.p, succ, tight)


def shortest_dicycle(H: AuxDigraph) -> list[int]:
    """A minimum-length dicycle of ``H`` as its vertex sequence.

    Among all shortest dicycles the one starting at the smallest vertex, then
    the lexicographically smallest sequence, is returned.
    """
    p = H.p
    pred: list[list[int]] = [[] for _ in range(p)]
    for i in range(p):
        for j in H.succ[i]:
            pred[j].append(i)

    def dist_to(s: int) -> list[int]:
        dist = [-1] * p
        dist[s] = 0
        queue = deque([s])
        while queue:
            w = queue.popleft()
            for u in pred[w]:
                if dist[u] < 0:
                    dist[u] = dist[w] + 1
                    queue.append(u)
        return dist

    best: Optional[tuple[int, int, list[int]]] = None
    for s in range(p):
        dist = dist_to(s)
        through = [dist[w] + 1 for w in H.succ[s] if dist[w] >= 0]
        if not through:
            continue
        q = min(through)
        if best is None or q < best[0]:
            best = (q, s, dist)
    if best is None:
        raise LemmaViolation("auxiliary digraph has no dicycle")
    q, s, dist = best
    cycle = [s]
    cur = s
    for step in range(1, q):
        cur = min(w for w in H.succ[cur] if w != s and dist[w] == q - step)
        cycle.append(cur)
    assert s in H.succ[cur]
    return cycle


class ReconfigStep(NamedTuple):
    remove: int
    add: int
    kind: StepKind


@dataclass(frozen=True)
class StepTrace:
    """Diagnostics captured when a step was chosen."""

    pairing: DiffPairing
    tight_sets: tuple[TightSet, ...]
    aux_arcs: tuple[tuple[int, int], ...]
    dicycle: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "pairs": [list(pq) for pq in self.pairing.pairs],
            "tight_sets": [
                None if X.vertices is None else sorted(X.vertices) for X in self.tight_sets
            ],
            "aux_arcs": [list(a) for a in self.aux_arcs],
            "dicycle": list(self.dicycle),
        }


@dataclass
class ReconfigSequence:
    start: frozenset[int]
    steps: list[ReconfigStep] = field(default_factory=list)
    traces: list[Optional[StepTrace]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def states(self) -> Iterator[frozenset[int]]:
        cur = self.start
        yield cur
        for st in self.steps:
            cur = (cur - {st.remove}) | {st.add}
            yield cur

    @property
    def final(self) -> frozenset[int]:
        *_, last = self.states()
        return last

    def append(self, step: ReconfigStep, trace: Optional[StepTrace] = None) -> None:
        self.steps.append(step)
        self.traces.append(trace)


def one_exchange(
    inst: PackingInstance,
    S: AbstractSet[int],
    T: AbstractSet[int],
    pairing: Optional[DiffPairing] = None,
    audit: Optional["LemmaAudit"] = None,
) -> tuple[ReconfigStep, frozenset[int], DiffPairing, StepTrace]:
    """Perform one exchange step.

    Returns the step, the new arc set, the pairing to use for the next step
    and the diagnostics.  After a ``CASE_TWO`` step the pairing is carried
    over with ``f_1`` replaced by ``f'_1``; otherwise it is recomputed.
    """
    D = inst.digraph
    S, T = frozenset(S), frozenset(T)
    if pairing is None:
        pairing = pair_differences(D, S, T)
    if pairing.p == 0:
        raise ValueError("S equals T; nothing to exchange")
    H = build_aux_digraph(inst, S, T, pairing)
    cycle = shortest_dicycle(H)
    assert H.tight_sets is not None
    if audit is not None:
        audit.check_aux(inst, S, T, pairing, H, len(cycle))

    if len(cycle) == 1:
        i = cycle[0]
        removed, added = pairing.pairs[i]
        kind = StepKind.SELF_LOOP
        c1 = i
    else:
        c1, c2 = cycle[0], cycle[1]
        X1 = H.tight_sets[c1].vertices
        if X1 is None or any(H.tight_sets[c].is_whole for c in cycle):
            raise LemmaViolation("whole-vertex tight set on a dicycle of length >= 2")
        Y = frozenset().union(*(H.tight_sets[c].vertices for c in cycle[1:]))
        core = X1 & Y
        e2, f1 = pairing.e(c2), pairing.f(c1)
        added = f1
        v = D.head(f1)
        if audit is not None:
            audit.check_case_two_geometry(inst, S, D.arcs[e2], D.arcs[f1], X1, Y)
        if D.head(e2) == v:
            removed = e2
        else:
            candidates = [a for a in D.in_arcs(v) if a in S and D.tail(a) in core]
            if not candidates:
                raise LemmaViolation(f"no replacement arc into {v} inside X_1 & Y")
            candidates.sort(key=lambda a: (a in T, a))
            removed = candidates[0]
        kind = StepKind.CASE_TWO if removed in T else StepKind.CASE_ONE

    new_set = (S - {removed}) | {added}
    verdict = check_feasible(inst, new_set)
    if not verdict:
        raise LemmaViolation(f"exchange -{removed} +{added} is infeasible: {verdict.violation}")
    if kind is StepKind.CASE_TWO:
        next_pairing = pairing.replace_f(c1, removed)
    else:
        next_pairing = pair_differences(D, new_set, T)
    if audit is not None and kind is not StepKind.SELF_LOOP:
        audit.check_after_swap(inst, S, new_set, pairing, H, c1, removed)
    trace = StepTrace(pairing, H.tight_sets, tuple(H.arcs), tuple(cycle))
    return ReconfigStep(removed, added, kind), new_set, next_pairing, trace


def reduce_difference(
    inst: PackingInstance,
    S: AbstractSet[int],
    T: AbstractSet[int],
    audit: Optional["LemmaAudit"] = None,
) -> tuple[list[tuple[ReconfigStep, StepTrace]], frozenset[int]]:
    """Exchange until ``|S - T|`` drops by one; at most ``min(p, k)`` steps."""
    S, T = frozenset(S), frozenset(T)
    p = len(S - T)
    if p == 0:
        raise ValueError("S equals T")
    budget = min(p, inst.k)
    pairing = pair_differences(inst.digraph, S, T)
    fragment: list[tuple[ReconfigStep, StepTrace]] = []
    prev_q: Optional[int] = None
    while True:
        step, S, pairing, trace = one_exchange(inst, S, T, pairing, audit)
        q = len(trace.dicycle)
        if audit is not None and prev_q is not None:
            audit.record("dicycle_shrinks", q <= prev_q - 1, (prev_q, q))
        if prev_q is not None and q >= prev_q:
            raise LemmaViolation(f"dicycle did not shrink: {prev_q} -> {q}")
        fragment.append((step, trace))
        if step.kind.reduces_difference:
            break
        prev_q = q
        if len(fragment) >= budget:
            raise LemmaViolation("reduction exceeded min(p, k) steps")
    if audit is not None:
        audit.record("fragment_length", len(fragment) <= budget, (len(fragment), budget))
    assert len(S - T) == p - 1
    return fragment, S


def length_bound(p: int, k: int) -> int:
    """Upper bound sum_{i=1..p} min(i, k) on the sequence length."""
    if p <= k:
        return p * (p + 1) // 2
    return k * (k + 1) // 2 + (p - k) * k


def reconfigure(
    inst: PackingInstance,
    S: AbstractSet[int],
    T: AbstractSet[int],
    audit: Optional["LemmaAudit"] = None,
) -> ReconfigSequence:
    """A reconfiguration sequence from ``S`` to ``T`` inside F_{k,r}."""
    S, T = frozenset(S), frozenset(T)
    require_feasible(inst, S, "S")
    require_feasible(inst, T, "T")
    seq = ReconfigSequence(S)
    p = len(S - T)
    cur = S
    while cur != T:
        fragment, cur = reduce_difference(inst, cur, T, audit)
        for step, trace in fragment:
            seq.append(step, trace)
    bound = length_bound(p, inst.k)
    if len(seq) > bound:
        raise LemmaViolation(f"sequence length {len(seq)} exceeds bound {bound}")
    if audit is not None:
        audit.record("length_bound", len(seq) <= bound, (len(seq), bound))
        if inst.k == 1:
            audit.record("k1_exact_length", len(seq) == p, (len(seq), p))
    return seq


def verify_walk(
    S: AbstractSet[int],
    T: AbstractSet[int],
    start: AbstractSet[int],
    steps: Sequence[ReconfigStep],
    is_feasible: Callable[[frozenset[int]], bool],
) -> bool:
    S, T = frozenset(S), frozenset(T)
    cur = frozenset(start)
    if cur != S or not is_feasible(cur):
        return False
    for st in steps:
        if st.remove not in cur or st.add in cur or st.remove == st.add:
            return False
        cur = (cur - {st.remove}) | {st.add}
        if not is_feasible(cur):
            return False
    return cur == T


def verify_sequence(
    inst: PackingInstance, S: AbstractSet[int], T: AbstractSet[int], seq: ReconfigSequence
) -> bool:
    """Independent check that ``seq`` walks from ``S`` to ``T`` inside F_{k,r}."""
    return verify_walk(S, T, seq.start, seq.steps, lambda F: check_feasible(inst, F).feasible)
