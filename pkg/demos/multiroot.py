"""Packings whose arborescences may use different roots."""

# %%
from arborswap import Digraph, check_feasible_multiroot, decompose_multiroot, reconfigure_multiroot
from arborswap.generate import generate_instance

g = generate_instance(5, 2, seed=21, extra_arcs=2, multiroot=True)
D = g.digraph
for name, F in (("S", g.S), ("T", g.T)):
    parts = decompose_multiroot(2, D, F)
    roots = [next(v for v in range(D.n) if all(D.head(a) != v for a in p)) for p in parts]
    print(f"{name}: roots {roots}")

# %%
seq = reconfigure_multiroot(2, D, g.S, g.T)
for step in seq.steps:
    print(f"{step.kind.value:18s} -{step.remove} +{step.add}")
print("every state in F_2:", all(check_feasible_multiroot(2, D, F) for F in seq.states()))

# %%
# Two vertices, k=1: reversing the single arc is one swap.
two = Digraph.from_pairs(2, [(0, 1), (1, 0)])
print(reconfigure_multiroot(1, two, {0}, {1}).steps)
