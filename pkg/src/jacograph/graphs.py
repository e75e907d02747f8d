"""Simple undirected graphs with 1-based vertex ids.

Graphs are immutable once constructed and safe to share across threads.
Provides the families the irregularity metrics are tested on (path, cycle,
star, complete bipartite), the disjoint union, the edge-joint (disjoint
union plus one bridging edge), and DOT / edge-list serialization.
"""

from __future__ import annotations

from bisect import insort
from collections.abc import Iterable

__all__ = [
    "SimpleGraph",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "degree_sequence",
    "disjoint_union",
    "edge_joint",
    "to_dot",
    "to_edge_list",
    "from_edge_list",
]


class SimpleGraph:
    """Undirected simple graph on vertices 1..n: no loops, no multi-edges."""

    __slots__ = ("_adj",)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        seen: set[tuple[int, int]] = set()
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i}, {j}) out of range 1..{n}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[i].append(j)
            adj[j].append(i)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @classmethod
    def _from_sorted_adjacency(cls, adj: list[list[int]]) -> "SimpleGraph":
        # Trusted fast path for internal builders: adj[0] is ignored and every
        # adj[v] must already be strictly ascending and symmetric.
        g = object.__new__(cls)
        g._adj = tuple(tuple(nbrs) for nbrs in adj)
        return g

    @property
    def n(self) -> int:
        return len(self._adj) - 1

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def _check_vertex(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return v

    def degree(self, v: int) -> int:
        return len(self._adj[self._check_vertex(v)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[self._check_vertex(v)]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, in lexicographic order."""
        return [(v, w) for v in range(1, self.n + 1) for w in self._adj[v] if w > v]

    def validate(self) -> None:
        """Recheck the simple-graph invariants (used against trusted builders)."""
        adj = self._adj
        for v in range(1, self.n + 1):
            nbrs = adj[v]
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of {v} not strictly ascending")
            for w in nbrs:
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if not 1 <= w <= self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if v not in adj[w]:
                    raise ValueError(f"asymmetric edge ({v}, {w})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edge_count})"


def path(n: int) -> SimpleGraph:
    """Path v_1 - v_2 - ... - v_n; a single vertex for n = 1."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return SimpleGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> SimpleGraph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return SimpleGraph(n, edges)


def star(n: int) -> SimpleGraph:
    """Star with center 1 and n >= 1 leaves (n + 1 vertices total)."""
    if n < 1:
        raise ValueError(f"star needs n >= 1 leaves, got {n}")
    return SimpleGraph(n + 1, ((1, leaf) for leaf in range(2, n + 2)))


def complete_bipartite(n: int, m: int) -> SimpleGraph:
    """Complete bipartite graph with sides of n and m vertices, n >= m >= 1.

    Side vertices 1..n each have degree m; side vertices n+1..n+m each have
    degree n.
    """
    if not n >= m >= 1:
        raise ValueError(f"complete bipartite needs n >= m >= 1, got ({n}, {m})")
    return SimpleGraph(n + m, ((a, b) for a in range(1, n + 1) for b in range(n + 1, n + m + 1)))


def degree_sequence(g: SimpleGraph) -> tuple[int, ...]:
    """Degrees in vertex-id order: entry i-1 is the degree of vertex i."""
    return tuple(len(g._adj[v]) for v in range(1, g.n + 1))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union; vertices of h are relabeled g.n + 1 .. g.n + h.n."""
    off = g.n
    adj: list[list[int]] = [[]]
    adj.extend(list(nbrs) for nbrs in g._adj[1:])
    adj.extend([w + off for w in nbrs] for nbrs in h._adj[1:])
    return SimpleGraph._from_sorted_adjacency(adj)


def edge_joint(g: SimpleGraph, v: int, h: SimpleGraph, u: int) -> SimpleGraph:
    """Disjoint union of g and h plus the single edge from v to (relabeled) u."""
    g._check_vertex(v)
    h._check_vertex(u)
    off = g.n
    adj: list[list[int]] = [[]]
    adj.extend(list(nbrs) for nbrs in g._adj[1:])
    adj.extend([w + off for w in nbrs] for nbrs in h._adj[1:])
    insort(adj[v], u + off)
    insort(adj[u + off], v)
    return SimpleGraph._from_sorted_adjacency(adj)


def to_dot(g: SimpleGraph) -> str:
    """DOT serialization: every vertex listed, edges in lexicographic order."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    lines.extend(f"  {i} -- {j};" for i, j in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: SimpleGraph) -> str:
    """Plain edge-list text: one "i j" line per edge, 1-based, i < j, sorted."""
    return "".join(f"{i} {j}\n" for i, j in g.edges())


def from_edge_list(text: str) -> SimpleGraph:
    """Parse the edge-list format produced by :func:`to_edge_list`.

    The vertex count is the largest id seen, so trailing isolated vertices
    are not representable in this format.
    """
    edges: list[tuple[int, int]] = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j', got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer vertex id in {raw!r}") from exc
        if not 1 <= i < j:
            raise ValueError(f"line {lineno}: require 1 <= i < j, got ({i}, {j})")
        top = max(top, j)
        edges.append((i, j))
    return SimpleGraph(top, edges)
