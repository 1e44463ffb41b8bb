"""Exact Gromov hyperbolicity via the four-point condition.

Values are half-integers, held internally as doubled integers (2*delta) so
all arithmetic stays integral; render with :meth:`HyperbolicityReport.render`.
The scan is the plain O(n^4) quadruple sweep: desk-scale inputs make
exactness cheap, and the hull-preservation checks demand exact values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .graphs import DistanceMatrix, Graph


@dataclass(frozen=True)
class HyperbolicityReport:
    """Doubled hyperbolicity 2*delta and a lexicographically least witness."""

    delta2: int
    witness: tuple[int, int, int, int]

    def render(self) -> str:
        return f"{self.delta2}/2"

    @property
    def delta(self) -> float:
        return self.delta2 / 2


def four_point_hyp2(dm: DistanceMatrix, u: int, v: int, w: int, x: int) -> int:
    """Twice the four-point defect: largest distance-sum minus the second largest."""
    d = dm.rows
    sums = sorted((d[u][v] + d[w][x], d[u][x] + d[v][w], d[u][w] + d[v][x]))
    return sums[2] - sums[1]


def hyperbolicity(g: Graph, max_vertices: int = 128) -> HyperbolicityReport:
    """Exact hyperbolicity with the least maximizing quadruple as witness."""
    if g.n > max_vertices:
        raise BudgetExceededError(
            f"quadruple scan capped at {max_vertices} vertices (n={g.n})"
        )
    dm = g.distances()
    if g.n < 4:
        return HyperbolicityReport(0, (0,) * 4)
    d = dm.rows
    best = 0
    witness = (0, 1, 2, 3)
    for u, v, w, x in combinations(range(g.n), 4):
        s1 = d[u][v] + d[w][x]
        s2 = d[u][x] + d[v][w]
        s3 = d[u][w] + d[v][x]
        if s1 < s2:
            s1, s2 = s2, s1
        if s1 < s3:
            s1, s3 = s3, s1
        defect = s1 - (s2 if s2 >= s3 else s3)
        if defect > best:
            best = defect
            witness = (u, v, w, x)
    return HyperbolicityReport(best, witness)


def find_alpha1_violation(g: Graph):
    """First (x, y, z, v) with zy an edge, z in I(x,y), y in I(z,v), yet
    d(x,v) < d(x,y) + d(y,v) - 1. None when the metric is alpha_1."""
    d = g.distances().rows
    n = g.n
    for x in range(n):
        for y in range(n):
            dxy = d[x][y]
            for z in g.neighbors(y):
                if d[x][z] + 1 != dxy:
                    continue
                for v in range(n):
                    if d[z][v] == 1 + d[y][v] and d[x][v] < dxy + d[y][v] - 1:
                        return (x, y, z, v)
    return None


def is_alpha1_metric(g: Graph) -> bool:
    return find_alpha1_violation(g) is None
