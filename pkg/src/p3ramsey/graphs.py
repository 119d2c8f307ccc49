"""Small undirected graphs as immutable bitmask adjacency rows.

Vertices are 0..order-1 with order capped at 32.  Row i is an int whose
bit j is set exactly when ij is an edge.  Graphs are treated as immutable:
every operation returns a new instance and never mutates its input.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_VERTICES = 32

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max); loops are rejected."""
    if u == v:
        raise ValueError(f"loop at vertex {u} is not an edge")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on 0..order-1 (order <= 32)."""

    __slots__ = ("order", "adj")

    def __init__(self, order: int, edges: Iterable[Edge] = ()):
        if not 0 <= order <= MAX_VERTICES:
            raise ValueError(f"order {order} outside supported range 0..{MAX_VERTICES}")
        rows = [0] * order
        for u, v in edges:
            u, v = edge(u, v)
            if not 0 <= u < order or not 0 <= v < order:
                raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.order = order
        self.adj = tuple(rows)

    @classmethod
    def from_adj_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from raw bit rows, validating symmetry and a zero diagonal."""
        order = len(rows)
        if order > MAX_VERTICES:
            raise ValueError(f"order {order} outside supported range 0..{MAX_VERTICES}")
        full = (1 << order) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex {order - 1}")
            if row >> i & 1:
                raise ValueError(f"row {i} has a loop")
        for i in range(order):
            for j in range(i + 1, order):
                if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                    raise ValueError(f"rows {i} and {j} disagree: adjacency not symmetric")
        return _make(order, tuple(rows))

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.order):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [i for i in range(self.order) if row >> i & 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()!r})"


def _make(order: int, adj: tuple[int, ...]) -> Graph:
    # Internal fast constructor: trusts that adj is symmetric and loop-free.
    g = Graph.__new__(Graph)
    g.order = order
    g.adj = adj
    return g


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    full = (1 << g.order) - 1
    return _make(
        g.order,
        tuple(~row & full & ~(1 << i) for i, row in enumerate(g.adj)),
    )


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees sorted in non-increasing order."""
    return tuple(sorted((row.bit_count() for row in g.adj), reverse=True))


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Copy of g with the given edges deleted; absent edges are an error."""
    rows = list(g.adj)
    for u, v in edges:
        u, v = edge(u, v)
        if not (rows[u] >> v & 1):
            raise ValueError(f"edge ({u},{v}) not present")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return _make(g.order, tuple(rows))


def apply_permutation(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: old vertex i becomes perm[i]."""
    n = g.order
    if sorted(perm) != list(range(n)):
        raise ValueError("perm is not a permutation of 0..order-1")
    rows = [0] * n
    for i, row in enumerate(g.adj):
        r = 0
        m = row
        while m:
            b = m & -m
            m ^= b
            r |= 1 << perm[b.bit_length() - 1]
        rows[perm[i]] = r
    return _make(n, tuple(rows))


def _component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    # Bitmask flood fill from the single-bit mask `start` within `allowed`.
    comp = start
    frontier = start
    while frontier:
        reach = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            reach |= adj[b.bit_length() - 1]
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    """Connectivity; the empty graph and a single vertex count as connected."""
    if g.order <= 1:
        return True
    full = (1 << g.order) - 1
    return _component_mask(g.adj, 1, full) == full


def is_biconnected(g: Graph) -> bool:
    """True when g has no cut vertex (2-connected); requires order >= 3."""
    n = g.order
    if n < 3:
        return False
    full = (1 << n) - 1
    if _component_mask(g.adj, 1, full) != full:
        return False
    for v in range(n):
        allowed = full & ~(1 << v)
        start = 1 << (0 if v != 0 else 1)
        if _component_mask(g.adj, start, allowed) != allowed:
            return False
    return True


def contains_c4(g: Graph) -> bool:
    """True when some 4-cycle occurs as a subgraph.

    Two vertices with two or more common neighbours span a C4, so the scan
    over vertex pairs is exhaustive.
    """
    adj = g.adj
    for u in range(g.order):
        for v in range(u + 1, g.order):
            common = adj[u] & adj[v] & ~(1 << u) & ~(1 << v)
            if common.bit_count() >= 2:
                return True
    return False


def min_degree(g: Graph) -> int:
    """Smallest vertex degree; 0 for the empty graph."""
    if g.order == 0:
        return 0
    return min(row.bit_count() for row in g.adj)
