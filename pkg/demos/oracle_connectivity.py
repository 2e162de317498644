"""Brute-force exchange graphs on small digraphs."""

# %%
from arborswap.families import exhaustive_battery
from arborswap.oracle import enumerate_feasible, exchange_graph, find_hard

battery = exhaustive_battery(2, n_max=3)
sizes = [len(exchange_graph(b.digraph, 2, 0).nodes) for b in battery]
connected = all(exchange_graph(b.digraph, 2, 0).is_connected() for b in battery)
print(
    f"{len(battery)} rooted digraphs on <= 3 vertices, largest family {max(sizes)}, all connected: {connected}"
)

# %%
from arborswap import Digraph

square = Digraph.from_pairs(3, [(0, 1), (0, 2), (1, 2), (2, 1)], 0)
print("k=1 feasible sets on the square:", [sorted(F) for F in enumerate_feasible(square, 1, 0)])

# %%
(h,) = find_hard(5000, k=2, seed=0, max_difference=2)
print(f"hard pair: n={h.digraph.n}, m={h.digraph.m}, |S-T|={h.difference}, distance={h.distance}")
