"""Derived-graph operators: R(G), RT(G) and the line graph.

Vertex numbering follows the block partition used in the Laplacian
factorisation of RT(G): first the edge-vertices ``e'`` (one per edge of G, in
canonical edge order), then the original vertices, then the first and second
vertex of each per-vertex triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, format_edge_list
from .linalg import RationalMatrix

__all__ = ["DerivedGraph", "r_graph", "rt_graph", "line_graph", "incidence_matrix"]


@dataclass(frozen=True)
class DerivedGraph:
    """A graph produced by an operator, with its vertex partition.

    ``partition`` maps block names to 1-based inclusive ``(first, last)``
    ranges; an empty block has ``last == first - 1``.
    """

    graph: Graph
    partition: dict[str, tuple[int, int]]
    operator: str
    base: Graph

    def block(self, name: str) -> range:
        first, last = self.partition[name]
        return range(first, last + 1)

    def to_edge_list(self) -> str:
        ranges = " ".join(f"{k}={a}-{b}" for k, (a, b) in self.partition.items())
        return format_edge_list(self.graph, [f"operator {self.operator}", f"partition {ranges}"])


def _ranges(sizes: list[tuple[str, int]]) -> dict[str, tuple[int, int]]:
    out, start = {}, 1
    for name, size in sizes:
        out[name] = (start, start + size - 1)
        start += size
    return out


def r_graph(g: Graph) -> DerivedGraph:
    """R(G): every edge ``(a, b)`` gains a new vertex ``e'`` adjacent to ``a`` and ``b``."""
    n, m = g.n, g.m
    # e'_k -> k, v_i -> m + i
    edges = [(m + u, m + v) for u, v in g.edges]
    for k, (u, v) in enumerate(g.edges, 1):
        edges += [(k, m + u), (k, m + v)]
    parts = _ranges([("I", m), ("V", n)])
    return DerivedGraph(Graph(n + m, tuple(edges)), parts, "r", g)


def rt_graph(g: Graph) -> DerivedGraph:
    """RT(G): R(G) plus a triangle ``v_i w1_i w2_i`` hung on every original vertex."""
    n, m = g.n, g.m
    base = r_graph(g).graph
    w1 = lambda i: m + n + i
    w2 = lambda i: m + 2 * n + i
    edges = list(base.edges)
    for i in range(1, n + 1):
        v = m + i
        edges += [(v, w1(i)), (v, w2(i)), (w1(i), w2(i))]
    parts = _ranges([("I", m), ("V", n), ("W1", n), ("W2", n)])
    return DerivedGraph(Graph(3 * n + m, tuple(edges)), parts, "rt", g)


def line_graph(g: Graph) -> Graph:
    """l(G): one vertex per edge of ``g`` (canonical order), adjacent iff the edges meet."""
    edges = [
        (a + 1, b + 1)
        for (a, e), (b, f) in combinations(enumerate(g.edges), 2)
        if set(e) & set(f)
    ]
    return Graph(g.m, tuple(edges))


def incidence_matrix(g: Graph) -> RationalMatrix:
    """The n x m vertex-edge incidence matrix, columns in canonical edge order."""
    data = [[0] * g.m for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        data[u - 1][k] = 1
        data[v - 1][k] = 1
    return RationalMatrix(data, cols=g.m)
