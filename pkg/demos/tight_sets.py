"""Minimal tight sets: the smallest vertex set around an arc with exactly k arcs entering."""

# %%
from arborswap import Digraph, PackingInstance, is_tight, minimal_tight_set

D = Digraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (3, 2)], root=0)
inst = PackingInstance(D, 1, 0)
S = frozenset({0, 1, 2})  # the path 0 -> 1 -> 2 -> 3

for f in sorted(D.all_arcs - S):
    X = minimal_tight_set(inst, S, f)
    print(f"arc {D.arcs[f][1:]}: {X}")

# %%
# Every single non-root vertex is tight for a feasible set; so is the set of
# all non-root vertices exactly when k arcs leave the root.
print([is_tight(inst, S, {v}) for v in (1, 2, 3)], is_tight(inst, S, {1, 2, 3}))
