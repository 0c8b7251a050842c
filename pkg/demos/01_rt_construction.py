"""Building R(G) and RT(G) and looking at their vertex blocks."""

# %%
from rtgraph import graph as G
from rtgraph.operators import r_graph, rt_graph

g = G.complete(3)
print("G:", g.n, "vertices,", g.m, "edges")

# %% R(G) adds one vertex per edge, adjacent to both endpoints.
r = r_graph(g)
print("R(G):", r.graph.n, "vertices,", r.graph.m, "edges")

# %% RT(G) also hangs a triangle-closing edge w1-w2 on every original vertex.
rt = rt_graph(g)
h = rt.graph
print("RT(G):", h.n, "vertices,", h.m, "edges  (expected 3n+m =", 3 * g.n + g.m, ", 3n+3m =", 3 * g.n + 3 * g.m, ")")
for name, (first, last) in rt.partition.items():
    print(f"  block {name}: vertices {first}..{last}")

# %% Degrees: new vertices have degree 2, original vertices reach 2r + 2.
print("degree sequence:", G.degree_sequence(h))

# %% The edge-list text form round-trips and records the partition in comments.
text = rt.to_edge_list()
print(text.splitlines()[:3])
assert G.parse_edge_list(text) == h
