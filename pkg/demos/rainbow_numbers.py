"""
Rainbow numbers of y = f(x)
===========================

A coloring of [n] avoids rainbow solutions of y = f(x) exactly when every
orbit lam, f(lam), f(f(lam)), ... is monochromatic.  Merging along orbits
gives the largest rainbow-free coloring, and one more color forces a
rainbow solution.
"""

from rainbowrado import (
    canonical_coloring,
    lambda_classes,
    mu_algorithm2,
    oracle_rb,
    parse,
    rb_general,
    rb_linear,
)

# %%
# Equations are parsed from plain text.  y = x^2 has f(1) = 1, so its
# solutions live on x >= 2.
eq = parse("y=x^2")
print(eq, "domain floor", eq.domain_floor)

# %%
# The orbits inside [20]: 2 -> 4 -> 16 and 3 -> 9 chain up, the rest are alone.
for cls in lambda_classes(eq, 20):
    if len(cls) > 1:
        print("class", list(cls.members))

col = canonical_coloring(eq, 20)
print("rainbow-free coloring uses", col.k, "colors:", col.colors)

# %%
# The descending preimage walk counts the merges directly.
res = mu_algorithm2(eq, 20, trace=True)
print("mu =", res.mu, "trace:", res.trace)
print("rb([20], y=x^2) =", rb_general(eq, 20))

# %%
# For affine equations the count has a closed form; check it against the
# exhaustive oracle on a few cases.
for a, b, n in [(2, 0, 10), (2, 1, 11), (3, 0, 9), (1, 3, 9)]:
    closed = rb_linear(a, b, n)
    brute = oracle_rb(n, parse(f"y={a}*x+{b}"))
    print(f"y={a}*x+{b}, n={n}: formula {closed}, oracle {brute}")
