"""Immutable simple undirected graphs: construction, parsing, generators, metrics.

Vertices are dense 0-based integers. Adjacency is stored both as frozensets
(for readable set algebra) and as integer bitmasks (for the exact solvers).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for integers, rounding toward +infinity (b > 0)."""
    if b <= 0:
        raise ValueError("divisor must be positive")
    return -((-a) // b)


class GraphFormatError(ValueError):
    """Raised for malformed graph input (headers, ids, self-loops)."""


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable after construction and safe to share across
    threads. Self-loops are rejected; duplicate edges collapse.
    """

    __slots__ = ("n", "m", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(sum(1 << w for w in s) for s in adj)
        self.m = sum(len(s) for s in adj) // 2

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def closed_mask(self, v: int) -> int:
        return self._masks[v] | (1 << v)

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(s) for s in self._adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return sorted((u, v) for u in range(self.n) for v in self._adj[u] if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphMetrics:
    """Structural metrics feeding bound-applicability checks.

    girth is None for acyclic graphs (never an integer sentinel);
    regular_degree is None when the graph is not regular.
    """

    n: int
    m: int
    max_degree: int
    min_degree: int
    girth: Optional[int]
    connected: bool
    bipartite: bool
    chordal: bool
    regular_degree: Optional[int]

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "girth": self.girth if self.girth is not None else "acyclic",
            "connected": self.connected,
            "bipartite": self.bipartite,
            "chordal": self.chordal,
            "regular_degree": (
                self.regular_degree if self.regular_degree is not None else "not regular"
            ),
        }
        return d


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------

def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse a graph from edge-list or DIMACS text.

    Edge list: first non-comment line "n m", then m lines "u v" (0-indexed).
    DIMACS: "c" comments, "p edge N M" header, "e u v" lines (1-indexed,
    re-indexed to 0 internally). Duplicate edge lines collapse; self-loops
    are an error.
    """
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format: {format!r}")


def _data_lines(text: str, comment: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        out.append(line)
    return out


def _parse_edgelist(text: str) -> Graph:
    lines = _data_lines(text, "#")
    if not lines:
        raise GraphFormatError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed edge-list header: {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"malformed edge-list header: {lines[0]!r}") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = None
    m_declared = 0
    edges = []
    for line in _data_lines(text, "c"):
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate DIMACS problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"malformed DIMACS header: {line!r}")
            n, m_declared = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before DIMACS header")
            if len(parts) != 3:
                raise GraphFormatError(f"malformed DIMACS edge line: {line!r}")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"DIMACS vertex id out of range: {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unrecognized DIMACS line: {line!r}")
    if n is None:
        raise GraphFormatError("missing DIMACS problem line")
    if len(edges) != m_declared:
        raise GraphFormatError(f"header declares {m_declared} edges, found {len(edges)}")
    return Graph(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

# The unique 4-regular girth-5 graph on 19 vertices, embedded as static data
# and re-validated every time it is constructed.
_ROBERTSON_EDGES = (
    (0, 1), (0, 8), (0, 12), (0, 18), (1, 2), (1, 5), (1, 16), (2, 3),
    (2, 9), (2, 13), (3, 4), (3, 7), (3, 18), (4, 5), (4, 12), (4, 15),
    (5, 6), (5, 10), (6, 7), (6, 13), (6, 17), (7, 8), (7, 11), (8, 9),
    (8, 15), (9, 10), (9, 17), (10, 11), (10, 14), (11, 12), (11, 16), (12, 13),
    (13, 14), (14, 15), (14, 18), (15, 16), (16, 17), (17, 18),
)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star of order n: center 0 joined to n-1 leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def edgeless_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("edgeless graph needs n >= 1")
    return Graph(n, [])


def complete_bipartite_graph(r: int, s: int) -> Graph:
    """K_{r,s}: class A = 0..r-1, class B = r..r+s-1."""
    if r < 1 or s < 1:
        raise ValueError("complete bipartite needs r, s >= 1")
    return Graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def double_star_graph(r: int, s: int) -> Graph:
    """Two adjacent centers (0 and 1) with r and s pendant leaves."""
    if r < 1 or s < 1:
        raise ValueError("double star needs r, s >= 1")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(r))
    edges.extend((1, 2 + r + j) for j in range(s))
    return Graph(2 + r + s, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Join of two graphs: disjoint union plus every edge between the parts."""
    edges = list(a.edges())
    edges.extend((a.n + u, a.n + v) for u, v in b.edges())
    edges.extend((u, a.n + v) for u in range(a.n) for v in range(b.n))
    return Graph(a.n + b.n, edges)


def robertson_graph() -> Graph:
    """The 19-vertex 4-regular girth-5 cage, validated at construction."""
    g = Graph(19, _ROBERTSON_EDGES)
    mt = metrics(g)
    if not (mt.n == 19 and mt.regular_degree == 4 and mt.girth == 5):
        raise AssertionError("embedded cage data failed validation")
    return g


def fig3_spider_graph() -> Graph:
    """Two adjacent hubs, three degree-2 midpoints per hub, one leaf per midpoint.

    14 vertices, 13 edges: hubs 0 and 1; midpoints 2..4 on hub 0 and 5..7 on
    hub 1; leaf 8+i pendant on midpoint 2+i.
    """
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(3))
    edges.extend((1, 5 + i) for i in range(3))
    edges.extend((2 + i, 8 + i) for i in range(6))
    return Graph(14, edges)


def random_gnm_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with n vertices and m edges, reproducible by seed."""
    if n < 1:
        raise ValueError("random graph needs n >= 1")
    max_m = n * (n - 1) // 2
    if not (0 <= m <= max_m):
        raise ValueError(f"m={m} outside [0, {max_m}] for n={n}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, rng.sample(pairs, m))


@dataclass(frozen=True)
class FamilySpec:
    """Tagged generator choice; args are ints, or nested specs for join."""

    kind: str
    args: tuple = ()

    def describe(self) -> str:
        if not self.args:
            return self.kind
        inner = ",".join(
            a.describe() if isinstance(a, FamilySpec) else str(a) for a in self.args
        )
        return f"{self.kind}({inner})"


_SPEC_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "edgeless": 1,
    "complete_bipartite": 2,
    "double_star": 2,
    "join": 2,
    "robertson": 0,
    "fig3_spider": 0,
    "random_gnm": 3,
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec."""
    kind = spec.kind
    if kind not in _SPEC_ARITY:
        raise ValueError(f"unknown graph family: {kind!r}")
    if len(spec.args) != _SPEC_ARITY[kind]:
        raise ValueError(f"{kind} expects {_SPEC_ARITY[kind]} parameter(s)")
    if kind == "path":
        return path_graph(*spec.args)
    if kind == "cycle":
        return cycle_graph(*spec.args)
    if kind == "star":
        return star_graph(*spec.args)
    if kind == "edgeless":
        return edgeless_graph(*spec.args)
    if kind == "complete_bipartite":
        return complete_bipartite_graph(*spec.args)
    if kind == "double_star":
        return double_star_graph(*spec.args)
    if kind == "join":
        a, b = spec.args
        if not (isinstance(a, FamilySpec) and isinstance(b, FamilySpec)):
            raise ValueError("join expects two nested family specs")
        return join(generate(a), generate(b))
    if kind == "robertson":
        return robertson_graph()
    if kind == "fig3_spider":
        return fig3_spider_graph()
    return random_gnm_graph(*spec.args)


def spec_from_string(text: str) -> FamilySpec:
    """Parse "robertson", "star(11)", "join(star(3),path(2))" and friends."""
    text = text.strip()
    if "(" not in text:
        return FamilySpec(text)
    if not text.endswith(")"):
        raise ValueError(f"malformed family spec: {text!r}")
    head, body = text.split("(", 1)
    body = body[:-1]
    args: list = []
    depth = 0
    current = ""
    for ch in body:
        if ch == "," and depth == 0:
            args.append(current)
            current = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        current += ch
    if current.strip():
        args.append(current)

    def parse_arg(a: str):
        try:
            return int(a)
        except ValueError:
            return spec_from_string(a)

    parsed = tuple(parse_arg(a.strip()) for a in args)
    return FamilySpec(head.strip(), parsed)


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """True when the graph has a single connected component (n <= 1 counts)."""
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def _is_bipartite(g: Graph) -> bool:
    color = [None] * g.n
    for src in range(g.n):
        if color[src] is not None:
            continue
        color[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] is None:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None when acyclic.

    BFS from every vertex; a non-tree edge (u, w) seen from root s gives a
    closed walk of length dist[u] + dist[w] + 1 containing a cycle, and every
    shortest cycle is found exactly from any of its own vertices.
    """
    best: Optional[int] = None
    for src in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] * 2 >= best:
                continue
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


def _is_chordal(g: Graph) -> bool:
    """Maximum-cardinality search followed by a perfect-elimination check."""
    n = g.n
    weight = [0] * n
    numbered = [False] * n
    order: list[int] = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]),
                key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not numbered[w]:
                weight[w] += 1
    # Reversed MCS order is a perfect elimination ordering iff chordal.
    elimination = list(reversed(order))
    position = {v: i for i, v in enumerate(elimination)}
    for v in elimination:
        later = [w for w in g.neighbors(v) if position[w] > position[v]]
        if not later:
            continue
        pivot = min(later, key=lambda w: position[w])
        for w in later:
            if w != pivot and not g.has_edge(pivot, w):
                return False
    return True


def metrics(g: Graph) -> GraphMetrics:
    """Exact structural metrics of a graph."""
    degrees = [g.degree(v) for v in range(g.n)]
    regular = degrees[0] if g.n > 0 and len(set(degrees)) == 1 else None
    return GraphMetrics(
        n=g.n,
        m=g.m,
        max_degree=max(degrees, default=0),
        min_degree=min(degrees, default=0),
        girth=_girth(g),
        connected=is_connected(g),
        bipartite=_is_bipartite(g),
        chordal=_is_chordal(g),
        regular_degree=regular,
    )
