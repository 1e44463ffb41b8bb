"""Recognizers for the graph classes the library quantifies over.

Chordality goes through maximum cardinality search with a perfect
elimination check; bipartiteness and splitness return explicit partitions;
AT-freeness decomposes the graph around each closed neighborhood. Full
cocomparability recognition is deliberately out of scope: generators supply
orderings and this module only verifies them.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graphs import Graph, bits


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search order, ties broken by lowest id."""
    n = g.n
    weight = [0] * n
    order = []
    remaining = set(range(n))
    while remaining:
        v = max(sorted(remaining), key=lambda u: weight[u])
        order.append(v)
        remaining.remove(v)
        for u in bits(g.adj[v]):
            if u in remaining:
                weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """True iff the MCS order is a perfect elimination ordering in reverse."""
    order = _mcs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    earlier_mask = 0
    for v in order:
        prior = g.adj[v] & earlier_mask
        if prior:
            parent = max(bits(prior), key=lambda u: pos[u])
            if prior & ~(g.adj[parent] | 1 << parent):
                return False
        earlier_mask |= 1 << v
    return True


def find_long_induced_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """Some induced cycle of length >= 4, or None when the graph is chordal.

    A witness exists iff the graph is not chordal: pick non-adjacent u, p with
    a common neighbor v, then a shortest u-p path avoiding the rest of N[v]
    closes an induced cycle through v.
    """
    n = g.n
    full = (1 << n) - 1
    for v in range(n):
        nbrs = list(bits(g.adj[v]))
        for i, u in enumerate(nbrs):
            for p in nbrs[i + 1 :]:
                if g.has_edge(u, p):
                    continue
                allowed = full & ~((g.adj[v] | 1 << v) & ~((1 << u) | (1 << p)))
                path = _shortest_path(g, u, p, allowed)
                if path is not None:
                    return (v, *path)
    return None


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> Optional[list[int]]:
    if not (allowed >> src & 1 and allowed >> dst & 1):
        return None
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v] & allowed):
                if u not in parent:
                    parent[u] = v
                    nxt.append(u)
        if dst in parent:
            break
        frontier = nxt
    if dst not in parent:
        return None
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def is_square_chordal(g: Graph) -> bool:
    return is_chordal(g.power(2))


def is_bipartite(g: Graph) -> Optional[tuple[int, ...]]:
    """A BFS 2-coloring (tuple of 0/1 per vertex), or None on an odd cycle."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bits(g.adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            frontier = nxt
    return tuple(color)


def find_odd_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """An odd closed walk witnessing non-bipartiteness (not necessarily induced)."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for start in range(g.n):
        if depth[start] != -1:
            continue
        depth[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bits(g.adj[v]):
                    if depth[u] == -1:
                        depth[u] = depth[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif depth[u] == depth[v] and u > v:
                        left, right = [v], [u]
                        while left[-1] != right[-1]:
                            left.append(parent[left[-1]])
                            right.append(parent[right[-1]])
                        return tuple(left[:-1] + list(reversed(right)))
            frontier = nxt
    return None


def is_split(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A (clique, independent set) partition, or None.

    Works down the degree sequence: in any split graph some prefix of the
    vertices sorted by descending degree is a valid clique side, so each
    prefix is tried and verified explicitly.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for size in range(g.n, -1, -1):
        clique = order[:size]
        rest = order[size:]
        if not all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]):
            continue
        if any(g.has_edge(u, v) for i, u in enumerate(rest) for v in rest[i + 1 :]):
            continue
        return tuple(sorted(clique)), tuple(sorted(rest))
    return None


def _component_labels(g: Graph, removed_mask: int) -> list[int]:
    """Connected component id per vertex of g minus ``removed_mask`` (-1 inside)."""
    labels = [-1] * g.n
    allowed = ((1 << g.n) - 1) & ~removed_mask
    comp = 0
    for v in range(g.n):
        if labels[v] != -1 or not allowed >> v & 1:
            continue
        reach = g._bfs_reach(1 << v, allowed)
        for u in bits(reach):
            labels[u] = comp
        comp += 1
    return labels


def find_asteroidal_triple(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically least asteroidal triple, or None."""
    n = g.n
    comp = [_component_labels(g, g.adj[v] | 1 << v) for v in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if g.has_edge(a, b):
                continue
            for c in range(b + 1, n):
                if g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                if (
                    comp[c][a] == comp[c][b] != -1
                    and comp[b][a] == comp[b][c] != -1
                    and comp[a][b] == comp[a][c] != -1
                ):
                    return (a, b, c)
    return None


def is_at_free(g: Graph) -> bool:
    return find_asteroidal_triple(g) is None


def find_cocomparability_violation(
    g: Graph, order: Sequence[int]
) -> Optional[tuple[int, int, int]]:
    """First (x, y, z) with x < y < z in ``order``, xz an edge, but neither xy nor yz."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    n = g.n
    for i in range(n):
        x = order[i]
        for k in range(i + 2, n):
            z = order[k]
            if not g.has_edge(x, z):
                continue
            for j in range(i + 1, k):
                y = order[j]
                if not g.has_edge(x, y) and not g.has_edge(y, z):
                    return (x, y, z)
    return None


def verify_cocomparability_ordering(g: Graph, order: Sequence[int]) -> bool:
    return find_cocomparability_violation(g, order) is None
