"""Bitset-backed immutable graphs and exact metric primitives.

Vertices are the integers ``0..n-1``. Each adjacency row is a Python int used
as a bitset, which keeps neighbourhood intersections and BFS frontiers
word-parallel without any third-party dependency. Graphs are immutable after
construction and safe to share across threads; every operation here is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DisconnectedGraphError

DEFAULT_MAX_VERTICES = 512


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs BFS hop distances plus the derived eccentricity data."""

    rows: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    radius: int
    diameter: int

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]


class Graph:
    """Simple undirected graph with one integer bit-row per vertex.

    Use :meth:`from_edge_list` to build instances; the raw constructor expects
    already-symmetric loop-free rows. ``labels`` are display-only and ignored
    by equality.
    """

    __slots__ = ("n", "adj", "labels", "_dm")

    def __init__(self, n: int, adj: Sequence[int], labels: Optional[Sequence[str]] = None):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(adj) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("label count does not match n")
        self._dm: Optional[DistanceMatrix] = None

    @classmethod
    def from_edge_list(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
        require_connected: bool = True,
        max_vertices: int = DEFAULT_MAX_VERTICES,
    ) -> "Graph":
        """Build a graph from ``(u, v)`` pairs, deduplicating repeats.

        Loops and out-of-range endpoints are rejected. Disconnected inputs are
        rejected by default because every metric operation assumes
        connectivity; pass ``require_connected=False`` to construct anyway
        (metric calls will still refuse to run).
        """
        if n > max_vertices:
            raise ValueError(f"n={n} exceeds the size cap {max_vertices}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        g = cls(n, rows, labels)
        if require_connected and not g.is_connected():
            raise DisconnectedGraphError("graph is disconnected")
        return g

    # -- basic accessors ------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``; vertex i of the result is vertices[i]."""
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in verts]
        return Graph(len(verts), rows, labels)

    # -- metric operations ----------------------------------------------

    def is_connected(self) -> bool:
        full = (1 << self.n) - 1
        return self._bfs_reach(1, full) == full

    def _bfs_reach(self, start_mask: int, allowed: int) -> int:
        """Set of vertices reachable from ``start_mask`` inside ``allowed``."""
        seen = start_mask & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def _bfs_levels(self, src: int) -> list[int]:
        dist = [-1] * self.n
        dist[src] = 0
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in bits(frontier):
                dist[v] = d
        return dist

    def distances(self) -> DistanceMatrix:
        """All-pairs distances via n BFS runs, cached on first use."""
        if self._dm is None:
            if not self.is_connected():
                raise DisconnectedGraphError("distances need a connected graph")
            rows = tuple(tuple(self._bfs_levels(v)) for v in range(self.n))
            ecc = tuple(max(row) for row in rows)
            self._dm = DistanceMatrix(rows, ecc, min(ecc), max(ecc))
        return self._dm

    def interval(self, x: int, y: int) -> frozenset[int]:
        """Vertices on some shortest (x, y)-path."""
        d = self.distances().rows
        dxy = d[x][y]
        return frozenset(v for v in range(self.n) if d[x][v] + d[v][y] == dxy)

    def interval_slice(self, x: int, y: int, k: int) -> frozenset[int]:
        """Vertices of the (x, y) interval at distance exactly k from x."""
        d = self.distances().rows
        dxy = d[x][y]
        if not 0 <= k <= dxy:
            raise ValueError(f"slice index {k} outside 0..{dxy}")
        return frozenset(
            v for v in range(self.n) if d[x][v] == k and d[x][v] + d[v][y] == dxy
        )

    def disk(self, v: int, r: int) -> frozenset[int]:
        """All vertices within distance r of v."""
        if r < 0:
            raise ValueError("negative radius")
        return frozenset(bits(self.disk_mask(v, r)))

    def disk_mask(self, v: int, r: int) -> int:
        d = self.distances().rows[v]
        mask = 0
        for u in range(self.n):
            if d[u] <= r:
                mask |= 1 << u
        return mask

    def power(self, k: int) -> "Graph":
        """Graph on the same vertices with edges between all pairs at distance <= k."""
        if k < 1:
            raise ValueError("power index must be >= 1")
        d = self.distances().rows
        rows = [0] * self.n
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if d[u][v] <= k:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        return Graph(self.n, rows, self.labels)


def is_isometric_subgraph(sub: Graph, host: Graph, embed: Sequence[int]) -> bool:
    """True iff ``embed`` maps ``sub`` onto host vertices preserving all distances."""
    if len(embed) != sub.n:
        raise ValueError("embedding must cover every vertex of the subgraph")
    if len(set(embed)) != len(embed):
        raise ValueError("embedding is not injective")
    ds = sub.distances().rows
    dh = host.distances().rows
    for u in range(sub.n):
        eu = embed[u]
        for v in range(u + 1, sub.n):
            if ds[u][v] != dh[eu][embed[v]]:
                return False
    return True


# -- edge-list text format -----------------------------------------------
#
# First meaningful line is "n m", followed by m lines "u v" with 0-based ids.
# Lines starting with "#" and blank lines are ignored. This format is the
# input to every CLI command.


def parse_edge_list(
    text: str,
    require_connected: bool = True,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Graph:
    """Parse the edge-list text format into a Graph."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    if not tokens:
        raise ValueError("empty edge-list input")
    head = tokens[0]
    if len(head) != 2:
        raise ValueError("header line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(tokens) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(tokens) - 1}")
    edges = []
    for tok in tokens[1:]:
        if len(tok) != 2:
            raise ValueError(f"bad edge line: {' '.join(tok)}")
        edges.append((int(tok[0]), int(tok[1])))
    return Graph.from_edge_list(
        n, edges, require_connected=require_connected, max_vertices=max_vertices
    )


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """Render the graph in DOT format with display labels."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
