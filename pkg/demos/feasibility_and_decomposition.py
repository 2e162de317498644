"""Deciding whether an arc set packs k arborescences, and splitting it when it does."""

# %%
from arborswap import Digraph, PackingInstance, check_feasible, decompose

# Root r=0 and two more vertices a=1, b=2; both a and b can reach each other.
D = Digraph.from_pairs(3, [(0, 1), (0, 2), (1, 2), (2, 1)], root=0)
inst = PackingInstance(D, k=2, root=0)

verdict = check_feasible(inst, D.all_arcs)
print("all four arcs feasible for k=2:", verdict.feasible)
for i, part in enumerate(decompose(inst, D.all_arcs)):
    print(f"  arborescence {i}:", [D.arcs[a][1:] for a in sorted(part)])

# %%
# Dropping the arc r->b leaves b with a single entering arc: a degree certificate.
print(check_feasible(inst, {0, 2, 3}).violation)

# %%
# With k=1, {a->b, b->a} has the right indegrees but nothing enters {a, b}
# from the root; the verdict carries that cut as a certificate.
print(check_feasible(PackingInstance(D, 1, 0), {2, 3}).violation)
