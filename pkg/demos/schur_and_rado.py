"""
Schur numbers and Rado non-existence
====================================

The Schur number S(k) is the least n such that every k-coloring of [n]
has a monochromatic solution of x1 + x2 = y.  For y = a*x + b the answer
flips: a coloring of all positive integers avoids it with two colors.
"""

import time

from rainbowrado import SearchStats, oracle_rado, parse, rado_nonexistence_check

schur = parse("y=x1+x2")

# %%
# Backtracking over restricted growth strings finds the last avoider and
# proves that none exists one step further.
for k in (2, 3):
    stats = SearchStats()
    start = time.perf_counter()
    v = oracle_rado(k, schur, stats=stats)
    print(f"S({k}) = {v.N}  ({stats.nodes} nodes, {time.perf_counter() - start:.3f}s)")
    print("  avoider of", v.N - 1, ":", v.avoider.classes())

# %%
# Requiring distinct values (x1 != x2) changes the numbers.
print("distinct-value S(2) =", oracle_rado(2, schur, mode="distinct", n_max=12).N)

# %%
# y = 2x + 1 has no Rado number for any k: cut the integers into blocks
# between consecutive iterates 1, 3, 7, 15, ... and alternate colors.
rep = rado_nonexistence_check(2, 1, n_max=10**4)
print(rep.rule.describe())
print("first blocks:", [rep.rule.color(m) for m in range(1, 16)])
print(rep.message)
