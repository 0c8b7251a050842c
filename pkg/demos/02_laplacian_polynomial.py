"""The Laplacian polynomial of RT(G) two ways: from its matrix, and from G alone."""

# %%
from fractions import Fraction

from rtgraph import graph as G
from rtgraph.closed_forms import rt_charpoly_closed_form, rt_charpoly_eval_at
from rtgraph.operators import rt_graph
from rtgraph.polynomial import poly_eval
from rtgraph.spectra import laplacian_char_poly

g = G.cycle(4)

# %% Direct route: exact characteristic polynomial of the 20x20 Laplacian.
direct = laplacian_char_poly(rt_graph(g).graph)
print("direct:", direct)

# %% Closed forms: substitute a rational function of mu into phi_L(G) or phi_A(G).
via_l = rt_charpoly_closed_form(g, "laplacian")
via_a = rt_charpoly_closed_form(g, "adjacency")
print("laplacian form equal:", via_l == direct)
print("adjacency form equal:", via_a == direct)

# %% Point evaluation never builds a polynomial in mu; mu = 1 and 3 are poles.
for mu in (Fraction(0), Fraction(5, 2), Fraction(-7, 3)):
    value = rt_charpoly_eval_at(g, mu)
    print(f"mu={mu}: {value}  matches direct: {value == poly_eval(direct, mu)}")
