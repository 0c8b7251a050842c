"""Simple undirected graphs, named families and the edge-list text format.

Vertices are numbered ``1..n``.  Edges are stored as normalised ``(u, v)``
pairs with ``u < v`` in lexicographic order, so two equal graphs always
serialise to the same text.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DuplicateEdge, OutOfRange, ParameterTooSmall, ParseError, SelfLoop

Edge = tuple[int, int]

__all__ = [
    "Graph",
    "from_edge_list",
    "complete",
    "cycle",
    "path",
    "star",
    "empty",
    "complete_bipartite",
    "petersen",
    "hypercube",
    "random_connected",
    "generator",
    "parse_family",
    "FAMILIES",
    "degree_sequence",
    "is_regular",
    "is_connected",
    "bipartition",
    "is_complete",
    "is_complete_bipartite",
    "complete_multipartite_parts",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
]


@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph on the vertices ``1..n``."""

    n: int
    edges: tuple[Edge, ...] = ()
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise OutOfRange(f"vertex count must be a non-negative integer, got {self.n!r}")
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdge(f"edge {e} appears twice")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise OutOfRange("need exactly one label per vertex")
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbours(self) -> list[set[int]]:
        """Adjacency sets indexed by vertex id (index 0 is unused)."""
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], labels=None) -> Graph:
    """Build a canonical :class:`Graph` from 1-based vertex pairs.

    >>> from_edge_list(3, [(2, 3), (1, 2)]).edges
    ((1, 2), (2, 3))
    """
    if n < 1:
        raise OutOfRange(f"vertex count must be positive, got {n}")
    return Graph(n, tuple((int(u), int(v)) for u, v in pairs), labels)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 2:
        raise ParameterTooSmall(f"complete graph needs n >= 2, got {n}")
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterTooSmall(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterTooSmall(f"path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def empty(n: int) -> Graph:
    if n < 1:
        raise ParameterTooSmall(f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``1..a`` and ``a+1..a+b``."""
    if a < 1 or b < 1:
        raise ParameterTooSmall(f"complete bipartite graph needs a, b >= 1, got {a}, {b}")
    return Graph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def star(k: int) -> Graph:
    """K_{1,k}; the centre is vertex 1."""
    return complete_bipartite(1, k)


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def hypercube(d: int) -> Graph:
    """The d-cube Q_d; vertex ``k+1`` is the bit string ``k``."""
    if d < 1:
        raise ParameterTooSmall(f"hypercube needs d >= 1, got {d}")
    size = 1 << d
    edges = [(k + 1, (k | (1 << b)) + 1) for k in range(size) for b in range(d) if not k & (1 << b)]
    return Graph(size, tuple(edges))


def random_connected(n: int, p: float = 0.3, rng: Optional[random.Random] = None) -> Graph:
    """Random spanning tree on ``n`` vertices plus each other pair with probability ``p``."""
    if n < 1:
        raise ParameterTooSmall(f"need n >= 1, got {n}")
    rng = rng or random.Random()
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for e in combinations(range(1, n + 1), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph(n, tuple(edges))


FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "empty": (empty, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "hypercube": (hypercube, 1),
}


def generator(family: str, *params: int) -> Graph:
    """Dispatch to a named family, e.g. ``generator("complete_bipartite", 3, 3)``."""
    key = family.lower().replace("-", "_")
    if key not in FAMILIES:
        raise ParseError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[key]
    if len(params) != arity:
        raise ParseError(f"family {key!r} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))


def parse_family(spec: str | Sequence[str]) -> Graph:
    """Parse a family spec such as ``"cycle 5"`` or ``["complete_bipartite", "2", "3"]``."""
    tokens = spec.split() if isinstance(spec, str) else list(spec)
    if not tokens:
        raise ParseError("empty family spec")
    try:
        params = [int(t) for t in tokens[1:]]
    except ValueError as exc:
        raise ParseError(f"family parameters must be integers: {tokens[1:]}") from exc
    return generator(tokens[0], *params)


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in vertex order, so ``degree_sequence(g)[i - 1]`` is d(v_i)."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u - 1] += 1
        deg[v - 1] += 1
    return tuple(deg)


def is_regular(g: Graph) -> Optional[int]:
    """The common degree ``r`` if ``g`` is r-regular, else ``None``."""
    degs = set(degree_sequence(g))
    if len(degs) == 1:
        return degs.pop()
    return None


def is_connected(g: Graph) -> bool:
    # breadth-first search from vertex 1; the null graph counts as connected
    if g.n == 0:
        return True
    adj = g.neighbours()
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def bipartition(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The two colour classes of a connected bipartite graph, else ``None``."""
    if g.n == 0 or not is_connected(g):
        return None
    adj = g.neighbours()
    colour = {1: 0}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in colour:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    left = tuple(v for v in range(1, g.n + 1) if colour[v] == 0)
    right = tuple(v for v in range(1, g.n + 1) if colour[v] == 1)
    return left, right


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes ``(a, b)`` with ``a <= b`` if ``g`` is isomorphic to K_{a,b}."""
    parts = bipartition(g)
    if parts is None or not parts[1]:
        return None
    a, b = sorted((len(parts[0]), len(parts[1])))
    return (a, b) if g.m == a * b else None


def complete_multipartite_parts(g: Graph) -> Optional[tuple[int, ...]]:
    """Sorted part sizes if ``g`` is complete multipartite, else ``None``.

    Equivalently the complement is a disjoint union of cliques: vertices with
    the same closed non-neighbourhood form one part.  K_n gives ``(1,)*n``.

    >>> complete_multipartite_parts(cycle(4))
    (2, 2)
    """
    if g.n == 0:
        return None
    nbrs = g.neighbours()
    everyone = frozenset(range(1, g.n + 1))
    part_of = {v: everyone - nbrs[v] for v in everyone}
    # non-adjacency must be an equivalence relation
    if any(part_of[u] != part_of[v] for v in everyone for u in part_of[v]):
        return None
    classes = {part: len(part) for part in part_of.values()}
    return tuple(sorted(classes.values()))


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header + ``m`` lines of ``"u v"`` format.

    Lines whose first non-blank character is ``#`` are comments.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from exc
    if not rows:
        raise ParseError("missing 'n m' header line")
    (n, m), pairs = rows[0], rows[1:]
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}")
    if m != len(pairs):
        raise ParseError(f"header declares {m} edges but {len(pairs)} were given")
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
