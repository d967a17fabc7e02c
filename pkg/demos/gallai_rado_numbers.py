"""
Gallai-Rado numbers with a forcing rainbow equation
===================================================

With k = b colors, avoiding rainbow solutions of y = x + b forces the
coloring by residue mod b.  The question then becomes where the first
monochromatic solution of the second equation sits inside one residue
class.  Each closed form is compared with a direct avoider search.
"""

from rainbowrado import affine, gr_dispatch, gr_linear, linear, oracle_gr, parse, verdict_to_json

# %%
# Linear second equation.  Pairing the largest coefficient with the smallest
# class member gives the minimum; the literal pairing overshoots.
for a_vec, c in [((1, 1), 0), ((1, 2), 0), ((1, 2), 1), ((2, 2), 1)]:
    v = gr_linear(2, a_vec, c)
    rep = oracle_gr(2, affine(1, 2), linear(a_vec, c), n_max=14)
    shown = getattr(v, "N", v.kind)
    print(f"a={a_vec}, c={c}: closed form {shown}, oracle candidate {rep.candidate}")
print("unsorted pairing for a=(1,2):", gr_linear(2, (1, 2), sort_coefficients=False).N)

# %%
# Nonlinear second equations through the dispatcher.
cases = [
    (3, "y=x+3", "y=x^2+1"),
    (2, "y=x+2", "y=2*x^2+2"),
    (2, "y=x+2", "y=x^3+1"),
    (2, "y=x+2", "y=x^2"),
    (4, "y=x+3", "y=x^2"),
]
for k, rb, mono in cases:
    v = gr_dispatch(k, parse(rb), parse(mono))
    out = verdict_to_json(v)
    print(f"GR_{k}({rb} : {mono}) -> {out['kind']} N={out['N']} via {out['route']}")

# %%
# A non-existence verdict carries an infinite coloring as its witness.
v = gr_dispatch(2, parse("y=x+2"), parse("y=x^3+1"))
print(v.reason.value, "-", v.rule.describe())
