"""Runtime checks of the structural lemmas behind the exchange algorithm.

A :class:`LemmaAudit` passed to :func:`arborswap.reconfig.reconfigure` (or the
multiroot variant) is fed every auxiliary digraph and every swap, and tallies
how often each property was checked and whether it failed.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import TYPE_CHECKING, AbstractSet, Any

from .digraph import Arc, count_in
from .packing import PackingInstance, check_feasible
from .tightset import minimal_tight_set

if TYPE_CHECKING:
    from .reconfig import AuxDigraph, DiffPairing

# Number of simple dipaths of H examined per auxiliary digraph.
MAX_DIPATHS = 200


class LemmaAudit:
    def __init__(self) -> None:
        self.checks: Counter[str] = Counter()
        self.violations: list[tuple[str, Any]] = []

    def record(self, name: str, ok: bool, detail: Any = None) -> None:
        self.checks[name] += 1
        if not ok:
            self.violations.append((name, detail))

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "LemmaAudit") -> None:
        self.checks.update(other.checks)
        self.violations.extend(other.violations)

    def summary(self) -> str:
        lines = [f"{name}: {count} checks" for name, count in sorted(self.checks.items())]
        lines.append(f"violations: {len(self.violations)}")
        return "\n".join(lines)

    # -- hooks called by the algorithm ------------------------------------

    def check_aux(
        self,
        inst: PackingInstance,
        S: frozenset[int],
        T: frozenset[int],
        pairing: "DiffPairing",
        H: "AuxDigraph",
        q: int,
    ) -> None:
        D = inst.digraph
        tight = H.tight_sets
        assert tight is not None
        p = pairing.p
        for i in range(p):
            self.record("aux_outdegree", bool(H.succ[i]), i)
        self.record("dicycle_length_bound", q <= min(p, inst.k), (q, p, inst.k))

        proper = [X.vertices for X in tight]
        for X in proper:
            if X is not None:
                self.record("tight_set_lattice", count_in(D, S, X) == inst.k, sorted(X))
        for i, j in combinations(range(p), 2):
            X, Y = proper[i], proper[j]
            if X is None or Y is None or not X & Y:
                continue
            self.lattice(inst, S, X, Y)

        for i, j in H.arcs:
            if proper[i] is not None and proper[j] is not None:
                self.record("aux_arc_intersects", bool(proper[i] & proper[j]), (i, j))

        s_arcs = [D.arcs[a] for a in sorted(S)]
        for path in _simple_dipaths(H, MAX_DIPATHS):
            sets = [proper[i] for i in path]
            if any(X is None for X in sets):
                continue
            union = frozenset().union(*sets)
            for e in s_arcs:
                if e.tail in union and e.head in union:
                    ok = any(e.tail in X and e.head in X for X in sets)
                    self.record("dipath_containment", ok, (path, e.id))

        for i, (_, f) in enumerate(pairing.pairs):
            v = D.head(f)
            for a in D.in_arcs(v):
                if a in S and tight[i].contains(D.arcs[a]):
                    swapped = (S - {a}) | {f}
                    self.record("feasible_swap", check_feasible(inst, swapped).feasible, (a, f))

    def lattice(
        self, inst: PackingInstance, S: AbstractSet[int], X: frozenset[int], Y: frozenset[int]
    ) -> None:
        D, k = inst.digraph, inst.k
        ok = (
            count_in(D, S, X & Y) == k
            and count_in(D, S, X | Y) == k
            and not any(
                (D.tail(a) in X - Y and D.head(a) in Y - X)
                or (D.tail(a) in Y - X and D.head(a) in X - Y)
                for a in S
            )
        )
        self.record("tight_set_lattice", ok, (sorted(X), sorted(Y)))

    def check_case_two_geometry(
        self,
        inst: PackingInstance,
        S: frozenset[int],
        e2: Arc,
        f1: Arc,
        X1: frozenset[int],
        Y: frozenset[int],
    ) -> None:
        D, k = inst.digraph, inst.k
        core = X1 & Y
        self.record("tight_set_lattice", count_in(D, S, Y) == k and count_in(D, S, core) == k)
        self.record("e2_not_in_Y", not (e2.tail in Y and e2.head in Y), e2.id)
        outer = X1 - Y
        for name, arc in (("e2_crosses_X1", e2), ("f1_crosses_X1", f1)):
            self.record(name, arc.tail in outer and arc.head in core, arc.id)

    def check_after_swap(
        self,
        inst: PackingInstance,
        S: frozenset[int],
        S_new: frozenset[int],
        pairing: "DiffPairing",
        H: "AuxDigraph",
        c1: int,
        f1_prime: int,
    ) -> None:
        """``S_new = S - f'_1 + f_1``: the first tight set is unchanged and the
        trichotomy holds for every tight set."""
        D = inst.digraph
        tight = H.tight_sets
        assert tight is not None
        X1 = tight[c1]
        X1_new = minimal_tight_set(inst, S_new, f1_prime, check=False)
        self.record("X1_preserved", X1_new.vertices == X1.vertices, c1)
        inside = [D.arcs[a] for a in sorted(S) if X1.contains(D.arcs[a])]
        for i, (_, f) in enumerate(pairing.pairs):
            anchor = f1_prime if i == c1 else f
            Xi, Xi_new = tight[i], minimal_tight_set(inst, S_new, anchor, check=False)
            for e in inside:
                ok = Xi.vertices == Xi_new.vertices or Xi.contains(e) or Xi_new.contains(e)
                self.record("trichotomy", ok, (i, e.id))


def _simple_dipaths(H: "AuxDigraph", limit: int) -> list[list[int]]:
    """Simple dipaths of H with at least two vertices, shortest first, up to ``limit``."""
    paths: list[list[int]] = []
    frontier = [[i] for i in range(H.p)]
    while frontier and len(paths) < limit:
        nxt = []
        for path in frontier:
            for j in H.succ[path[-1]]:
                if j not in path:
                    nxt.append(path + [j])
        paths.extend(nxt[: limit - len(paths)])
        frontier = nxt
    return paths
