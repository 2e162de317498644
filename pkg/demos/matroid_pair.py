"""Two rank-3 matroids whose common bases are connected by single exchanges
while the common bases of their 2-fold unions are not."""

# %%
from arborswap.matroid import anchor_path, demo_report, fmt_set

lines, ok = demo_report()
print("\n".join(lines))

# %%
print(" -> ".join(fmt_set(B) for B in anchor_path(3, 3)))
