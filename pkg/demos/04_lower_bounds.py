"""Degree-based lower bounds on Kf(G) and Kf(RT(G)), and where they are tight."""

# %%
from rtgraph import graph as G
from rtgraph.closed_forms import kf_rt_formula, kf_rt_lower_bound
from rtgraph.spectra import kirchhoff_via_coefficients, zhou_trinajstic_lower_bound

# %% Kf(G) >= -1 + (n-1) sum 1/d_i.  Tight on K_n and K_{a,b} ...
for g in (G.complete(5), G.complete_bipartite(2, 4), G.petersen(), G.cycle(6)):
    print(g, zhou_trinajstic_lower_bound(g), "<=", kirchhoff_via_coefficients(g))

# %% ... and in fact on every complete multipartite graph, e.g. the wheel on 5 vertices = K_{1,2,2}.
wheel = G.from_edge_list(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5)])
print("wheel parts", G.complete_multipartite_parts(wheel), zhou_trinajstic_lower_bound(wheel), kirchhoff_via_coefficients(wheel))

# %% For r-regular G the bound carries over to RT(G).  The octahedron K_{2,2,2} is 4-regular and tight,
# even though it is neither complete nor bipartite.
octahedron = G.from_edge_list(6, [(a, b) for a in range(1, 7) for b in range(a + 1, 7) if (a + 1) // 2 != (b + 1) // 2])
for name, g in (("K4", G.complete(4)), ("C4", G.cycle(4)), ("Q3", G.hypercube(3)), ("octahedron", octahedron)):
    r = G.is_regular(g)
    bound, value = kf_rt_lower_bound(g.n, r), kf_rt_formula(g.n, r, kirchhoff_via_coefficients(g))
    print(f"{name:10} bound {bound} value {value} {'tight' if bound == value else 'strict'}")
