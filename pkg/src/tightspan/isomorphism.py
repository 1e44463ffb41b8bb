"""Backtracking isomorphism search for small graphs.

Intended as an oracle-comparison utility: deterministic, exact, and only
meant for the few dozen vertices that hull cross-checks need. The search
prunes with iterated neighbourhood refinement seeded by degree and
eccentricity, which keeps it fast on the twin-heavy graphs it is used on,
but it is not a scalable isomorphism test.
"""

from __future__ import annotations

from typing import Optional

from .errors import BudgetExceededError
from .graphs import Graph

DEFAULT_ISO_CAP = 16


def _refined_colors(g: Graph) -> list[tuple]:
    dm = g.distances()
    colors: list[tuple] = [
        (g.degree(v), dm.ecc[v], tuple(sorted(g.degree(u) for u in g.neighbors(v))))
        for v in range(g.n)
    ]
    while True:
        signature = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        if len(set(signature)) == len(set(colors)):
            return signature
        colors = signature


def are_isomorphic_small(
    a: Graph, b: Graph, max_vertices: int = DEFAULT_ISO_CAP
) -> Optional[tuple[int, ...]]:
    """Return a vertex map a->b witnessing isomorphism, or None.

    Deterministic search order: vertices of ``a`` are matched most-constrained
    colour class first, candidates tried in ascending id. Raises
    BudgetExceededError above ``max_vertices``.
    """
    if a.n > max_vertices or b.n > max_vertices:
        raise BudgetExceededError(
            f"isomorphism cap {max_vertices} exceeded (n={max(a.n, b.n)})"
        )
    if a.n != b.n or a.m != b.m:
        return None
    if a.n == 1:
        return (0,)
    ca = _refined_colors(a)
    cb = _refined_colors(b)
    if sorted(ca) != sorted(cb):
        return None

    class_size = {}
    for c in ca:
        class_size[c] = class_size.get(c, 0) + 1
    # Most-constrained first, then prefer staying adjacent to matched vertices.
    order: list[int] = []
    placed = set()
    remaining = set(range(a.n))
    while remaining:
        anchored = [v for v in remaining if any(u in placed for u in a.neighbors(v))]
        pool = anchored if anchored else list(remaining)
        v = min(pool, key=lambda v: (class_size[ca[v]], v))
        order.append(v)
        placed.add(v)
        remaining.remove(v)

    candidates = {v: [w for w in range(b.n) if cb[w] == ca[v]] for v in range(a.n)}
    mapping = [-1] * a.n
    used = [False] * b.n

    def backtrack(i: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        row = a.adj[v]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:i]:
                if (row >> u & 1) != (b.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    if backtrack(0):
        return tuple(mapping)
    return None
