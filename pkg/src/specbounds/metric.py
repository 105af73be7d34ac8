"""Path metric, balls, volumes, inradius and covering radius.

The distance between two vertices is the infimum of path lengths, where an
edge of weight b contributes length 1/b.  All-pairs distances come from one
single-source shortest-path run per vertex over the positive-weight
adjacency; the predecessor structure of each run is kept so a geodesic can
be read back for any pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra as _dijkstra

from .errors import EmptySet, FullSet
from .generators import DEFAULT_SEED
from .graph import GeometryConstants, WeightedGraph, validate
from .report import BoundReport, make_report


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class MetricData:
    """All-pairs distances plus one geodesic tree per source vertex.

    dist[i, j] is the length of a shortest path from vertex i to vertex j.
    pred[i, j] is the predecessor of j on such a path from source i
    (-1 at the source itself).
    """

    graph: WeightedGraph
    dist: np.ndarray
    pred: np.ndarray

    def d(self, x: str, y: str) -> float:
        gi = self.graph.index
        return float(self.dist[gi[x], gi[y]])


def compute_metric(g: WeightedGraph) -> MetricData:
    """All-pairs shortest paths under edge length 1/b, with witnesses."""
    n = g.n
    if n == 1:
        return MetricData(g, _readonly(np.zeros((1, 1))), _readonly(np.full((1, 1), -1, dtype=np.int64)))
    rows, cols, lengths = [], [], []
    for i, j, w in g.edges:
        rows += [i, j]
        cols += [j, i]
        length = 1.0 / w
        lengths += [length, length]
    adj = csr_matrix((lengths, (rows, cols)), shape=(n, n))
    dist, pred = _dijkstra(adj, directed=True, return_predecessors=True)
    pred = pred.astype(np.int64)
    pred[pred < 0] = -1
    return MetricData(g, _readonly(dist), _readonly(pred))


def geodesic(md: MetricData, x: str, y: str) -> tuple[str, ...]:
    """One shortest path from x to y, read from the predecessor tree."""
    gi = md.graph.index
    i, j = gi[x], gi[y]
    chain = [j]
    while chain[-1] != i:
        p = int(md.pred[i, chain[-1]])
        if p < 0:
            raise ValueError(f"no path recorded from {x!r} to {y!r}")
        chain.append(p)
    chain.reverse()
    return tuple(md.graph.vertices[k] for k in chain)


def path_length(g: WeightedGraph, path: Sequence[str]) -> float:
    """Sum of 1/b over consecutive edges of an explicit vertex path."""
    total = 0.0
    for u, v in zip(path, path[1:]):
        w = g.b(u, v)
        if w <= 0.0:
            raise ValueError(f"path uses missing edge {u!r}-{v!r}")
        total += 1.0 / w
    return total


def ball(md: MetricData, x: str, r: float, closed: bool = True) -> tuple[str, ...]:
    """Closed ball {y : d(x,y) <= r} or open ball {y : d(x,y) < r}.

    Membership compares the stored distances exactly; no tolerance.
    """
    if r < 0.0:
        raise ValueError("radius must be nonnegative")
    row = md.dist[md.graph.index[x]]
    mask = row <= r if closed else row < r
    return tuple(md.graph.vertices[k] for k in np.flatnonzero(mask))


def inradius(md: MetricData, omega: Iterable[str]) -> float:
    """Largest r such that some open ball U_r(x), x in omega, stays in omega.

    On a finite graph this equals max over x in omega of the distance from
    x to the complement.
    """
    g = md.graph
    omega = tuple(omega)
    if not omega:
        raise EmptySet("inradius of the empty set is undefined")
    if len(set(omega)) == g.n:
        raise FullSet("inradius of the whole vertex set is undefined")
    omega_idx = g.indices(omega)
    d_idx = g.indices(g.complement(omega))
    # Rows indexed by complement points: same entries the covering radius
    # reads, so Covr(D) == Inr(X \ D) holds bit-for-bit.
    colmin = md.dist[d_idx, :].min(axis=0)
    return float(colmin[omega_idx].max())


def covering_radius(md: MetricData, d_set: Iterable[str]) -> float:
    """Smallest R with X covered by closed R-balls around the given centers."""
    g = md.graph
    centers = tuple(d_set)
    if not centers:
        raise EmptySet("covering radius of the empty set is undefined")
    d_idx = g.indices(centers)
    colmin = md.dist[d_idx, :].min(axis=0)
    return float(colmin.max())


@dataclass(frozen=True, eq=False)
class BallVolumeTable:
    """Ball-volume queries over a fixed metric.

    vol_of_ball(x, r) is m(B_r(x)); vol_bracket(s) is the supremum of
    closed-ball volumes of radius s over all centers.
    """

    graph: WeightedGraph
    md: MetricData

    def vol_of_ball(self, x: str, r: float) -> float:
        row = self.md.dist[self.graph.index[x]]
        return float(self.graph.m[row <= r].sum())

    def vol_bracket(self, s: float) -> float:
        return float(((self.md.dist <= s) @ self.graph.m).max())

    def vol_bracket_within(self, s: float, subset: Iterable[str]) -> float:
        """sup over x of m(B_s(x) intersected with the given subset)."""
        mask = np.zeros(self.graph.n)
        mask[self.graph.indices(subset)] = 1.0
        restricted = self.graph.m * mask
        return float(((self.md.dist <= s) @ restricted).max())

    def vol_bracket_centers(self, s: float, centers: Iterable[str]) -> float:
        """sup over the given centers only of m(B_s(p))."""
        idx = self.graph.indices(centers)
        if idx.size == 0:
            raise EmptySet("no centers supplied")
        return float(((self.md.dist[idx, :] <= s) @ self.graph.m).max())


def check_homogeneity(
    g: WeightedGraph,
    md: MetricData,
    constants: GeometryConstants | None = None,
    max_centers: int = 24,
    seed: int = DEFAULT_SEED,
) -> list[BoundReport]:
    """Verify the two uniform-geometry estimates on sampled balls.

    Row 1: every pair of distinct vertices is at distance >= 1/b_max.
    Row 2: for sampled (x, r), the cardinality of B_r(x) stays below
    (r * delta * m_max)^(r * b_max) + 1.  A violated row signals an
    implementation bug, not a property of the graph.
    """
    c = constants if constants is not None else validate(g)
    rows: list[BoundReport] = []

    if g.n == 1 or c.b_max == 0.0:
        rows.append(
            make_report(
                "homogeneity/min_distance", 0.0, 0.0, ">=",
                vacuous=True, note="single vertex; no pairs",
            )
        )
    else:
        off = md.dist[~np.eye(g.n, dtype=bool)]
        rows.append(
            make_report(
                "homogeneity/min_distance",
                float(off.min()),
                1.0 / c.b_max,
                ">=",
            )
        )

    rng = np.random.default_rng(seed)
    if g.n <= max_centers:
        centers = np.arange(g.n)
    else:
        centers = rng.choice(g.n, size=max_centers, replace=False)
        centers.sort()

    finite = md.dist[md.dist > 0.0]
    radii: list[float] = []
    if c.b_max > 0.0:
        radii.append(0.5 / c.b_max)
    if finite.size:
        radii.extend(float(np.quantile(finite, q)) for q in (0.25, 0.5, 0.75, 1.0))

    worst = None
    for x in centers:
        row = md.dist[x]
        for r in radii:
            count = float(np.count_nonzero(row <= r))
            base = r * c.delta * c.m_max
            exponent = r * c.b_max
            with np.errstate(over="ignore"):
                bound = float(np.power(base, exponent)) + 1.0
            bound = float(min(bound, np.finfo(float).max))
            margin = bound - count
            if worst is None or margin < worst[0]:
                worst = (margin, count, bound, g.vertices[int(x)], r)
    if worst is None:
        rows.append(
            make_report(
                "homogeneity/ball_count", 1.0, 2.0, "<=",
                vacuous=True, note="no radii sampled",
            )
        )
    else:
        _, count, bound, vid, r = worst
        rows.append(
            make_report(
                "homogeneity/ball_count", count, bound, "<=",
                note=f"tightest sample at x={vid} r={r!r}",
            )
        )
    return rows
