"""A pair of 2-arborescence packings whose shortest exchange walk is longer than |S - T|.

The first swap trades in a target arc but removes an arc that both sets
share; only afterwards do direct swaps work.
"""

# %%
from arborswap import (
    Digraph,
    LemmaAudit,
    PackingInstance,
    length_bound,
    reconfigure,
    verify_sequence,
)
from arborswap.oracle import exchange_distance

D = Digraph.from_pairs(
    5,
    [(0, 3), (3, 4), (1, 2), (0, 1), (1, 4), (4, 3), (3, 2), (2, 1), (2, 4), (4, 2)],
    root=0,
)
inst = PackingInstance(D, 2, 0)
S = frozenset({0, 1, 2, 3, 5, 7, 8, 9})
T = frozenset({0, 3, 4, 5, 6, 7, 8, 9})
print("|S - T| =", len(S - T), " brute-force distance =", exchange_distance(D, 2, 0, S, T))

# %%
audit = LemmaAudit()
seq = reconfigure(inst, S, T, audit)
for step, trace in zip(seq.steps, seq.traces):
    print(
        f"{step.kind.value:13s} -{D.arcs[step.remove][1:]} +{D.arcs[step.add][1:]}"
        f"  tight sets {list(trace.tight_sets)}  dicycle {list(trace.dicycle)}"
    )
print(
    "valid:", verify_sequence(inst, S, T, seq), " length", len(seq), "<= bound", length_bound(2, 2)
)
print(audit.summary())
