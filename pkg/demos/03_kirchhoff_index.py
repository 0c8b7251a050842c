"""Kirchhoff index of RT(G) by four independent routes."""

# %%
from rtgraph import graph as G
from rtgraph.closed_forms import kf_rt_formula, kf_rt_special
from rtgraph.operators import rt_graph
from rtgraph.spectra import kirchhoff_via_coefficients, kirchhoff_via_resistance, kirchhoff_via_spectrum

corpus = {
    "K2": G.complete(2),
    "K4": G.complete(4),
    "C5": G.cycle(5),
    "K33": G.complete_bipartite(3, 3),
    "Petersen": G.petersen(),
    "Q3": G.hypercube(3),
}

# %%
print(f"{'graph':9} {'resistance':>10} {'coeffs':>10} {'formula':>10} {'spectrum':>14}")
for name, g in corpus.items():
    h = rt_graph(g).graph
    r = G.is_regular(g)
    formula = kf_rt_formula(g.n, r, kirchhoff_via_coefficients(g))
    print(f"{name:9} {str(kirchhoff_via_resistance(h)):>10} {str(kirchhoff_via_coefficients(h)):>10} "
          f"{str(formula):>10} {kirchhoff_via_spectrum(h):>14.10f}")

# %% The family-specific displays agree with the general formula.
for n in range(3, 7):
    assert kf_rt_special("complete", n) == kf_rt_formula(n, n - 1, n - 1)
    assert kf_rt_special("cycle", n) == kf_rt_formula(n, 2, kirchhoff_via_coefficients(G.cycle(n)))
print("special formulas agree for n = 3..6")
