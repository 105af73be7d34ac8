"""Ground states, the ground-state transform, and the potential bound.

For a connected finite graph with bounded potential, the lowest eigenpair
of the Schroedinger operator exists and its eigenfunction is strictly
positive (the symmetrized matrix has nonpositive off-diagonal entries and
is irreducible).  Rescaling the eigenfunction so that its maximum and
minimum multiply to one minimizes the pinching constant c with
1/c <= phi <= c.  The transform replaces edge weights by
phi(x) phi(y) b(x,y) and measures by phi(x)^2 m(x); distances and volumes
of the transformed graph stay within a factor c^2 of the originals, which
turns the ball-volume Dirichlet bound into a bound for the potential form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ConvergenceFailure, DoublingUnverified, EmptyCenters, EmptyOmega
from .generators import DEFAULT_SEED
from .graph import WeightedGraph
from .metric import BallVolumeTable, MetricData, inradius
from .report import BoundReport, make_report
from .spectral import assemble, dirichlet_energy, eigdecompose, lowest_eigenvalue


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GroundState:
    """Positive ground state with its energy and pinching constant.

    phi is normalized so max(phi) * min(phi) = 1, hence
    c = sqrt(max phi / min phi) and 1/c <= phi <= c.
    """

    graph: WeightedGraph
    phi: np.ndarray
    lambda_v: float
    c: float


def ground_state(g: WeightedGraph) -> GroundState:
    """Lowest eigenpair of the Schroedinger operator of the graph.

    A graph without potential (or with an exactly zero one) has the
    constant function as its ground state with energy exactly zero; that
    case is returned analytically so downstream bounds reduce bit-for-bit
    to the potential-free ones.
    """
    if g.potential is None or not np.any(g.potential):
        return GroundState(
            graph=g,
            phi=_readonly(np.ones(g.n)),
            lambda_v=0.0,
            c=1.0,
        )

    sd = eigdecompose(assemble(g))
    lam = float(sd.eigenvalues[0])
    phi = np.array(sd.vectors[:, 0])
    anchor = int(np.argmax(np.abs(phi)))
    if phi[anchor] < 0.0:
        phi = -phi
    if np.any(phi <= 0.0):
        raise ConvergenceFailure("ground state came back with a sign change")
    scale = np.sqrt(phi.max() * phi.min())
    phi = phi / scale
    c = float(np.sqrt(phi.max() / phi.min()))
    return GroundState(graph=g, phi=_readonly(phi), lambda_v=lam, c=c)


def ground_state_transform(g: WeightedGraph, gs: GroundState) -> WeightedGraph:
    """The transformed graph: weights phi(x) phi(y) b(x,y), measures phi^2 m.

    The potential is consumed by the transform and dropped.  With the
    constant ground state the transform is the identity on weights and
    measures.
    """
    phi = gs.phi
    edges = [
        (g.vertices[i], g.vertices[j], (phi[i] * phi[j]) * w) for i, j, w in g.edges
    ]
    m = list((phi * phi) * g.m)
    return WeightedGraph.from_edge_list(g.vertices, m, edges)


def ground_state_transform_check(
    g: WeightedGraph,
    gs: GroundState,
    samples: int = 100,
    seed: int = DEFAULT_SEED,
) -> BoundReport:
    """Verify the transform identity on random test functions.

    For each sample f:  E_V(f,f) - lambda_V ||f||^2  must equal the energy
    of f/phi in the transformed graph.  On a finite graph the ground state
    is a true eigenfunction, so this holds with equality; the row reports
    the worst relative mismatch against a 1e-8 budget.
    """
    transformed = ground_state_transform(g, gs)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        f = rng.standard_normal(g.n)
        lhs = (
            dirichlet_energy(g, f, include_potential=True)
            - gs.lambda_v * float(np.sum(f * f * g.m))
        )
        rhs = dirichlet_energy(transformed, f / gs.phi)
        rel = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-12)
        worst = max(worst, rel)
    return make_report(
        "potential/transform_identity", worst, 1e-8, "<=",
        note=f"worst relative mismatch over {samples} random functions",
    )


def verify_doubling(
    volumes: BallVolumeTable,
    exponent: float,
    scales: Iterable[float],
    factors: Iterable[float] = (1.5, 2.0, 3.0),
) -> None:
    """Check vol[a*s] <= a^N vol[s] on a sampled grid; raise when violated."""
    for s in scales:
        if s <= 0.0:
            continue
        base = volumes.vol_bracket(s)
        for a in factors:
            if a < 1.0:
                continue
            if volumes.vol_bracket(a * s) > a**exponent * base * (1.0 + 1e-12):
                raise DoublingUnverified(
                    f"vol[{a * s!r}] exceeds {a!r}^{exponent!r} * vol[{s!r}]"
                )


def potential_dirichlet_bound(
    g: WeightedGraph,
    md: MetricData,
    gs: GroundState,
    d_set: Iterable[str],
    doubling_exponent: float | None = None,
) -> list[BoundReport]:
    """Ball-volume lower bound for the Dirichlet form with a potential.

    The restricted ground energy is at least
    lambda_V + 1 / (c^4 * R * vol[c^2 R]), with R the covering radius of
    the penalty set in the original metric and vol[.] in the original
    measure.  When a doubling exponent N is supplied it is first verified
    on a sampled grid (including the pair actually used); the variant
    lambda_V + 1 / (c^(4+2N) * R * vol[R]) is then emitted as well.
    """
    d = tuple(dict.fromkeys(d_set))
    if not d:
        raise EmptyCenters("penalty set must be nonempty")
    omega = g.complement(d)
    if not omega:
        raise EmptyOmega("penalty set covers the graph; no region remains")

    truth = lowest_eigenvalue(assemble(g, omega=omega))
    R = inradius(md, omega)
    volumes = BallVolumeTable(g, md)
    c2 = gs.c * gs.c
    c4 = c2 * c2
    vol_c2r = volumes.vol_bracket(c2 * R)
    bound = gs.lambda_v + 1.0 / (c4 * R * vol_c2r)
    rows = [
        make_report(
            "potential/dirichlet_lower", truth, bound, ">=",
            note=f"c={gs.c!r}, R={R!r}",
        )
    ]
    if doubling_exponent is not None:
        n_exp = float(doubling_exponent)
        finite = md.dist[md.dist > 0.0]
        scales = [R] + (
            [float(np.quantile(finite, q)) for q in (0.25, 0.5, 0.75)] if finite.size else []
        )
        # The grid must include the pair the variant actually uses: s = R, a = c^2.
        factors = sorted({1.5, 2.0, 3.0, c2})
        verify_doubling(volumes, n_exp, scales, factors)
        vol_r = volumes.vol_bracket(R)
        rows.append(
            make_report(
                "potential/dirichlet_lower_doubling",
                truth,
                gs.lambda_v + 1.0 / (gs.c ** (4.0 + 2.0 * n_exp) * R * vol_r),
                ">=",
                note=f"doubling exponent {n_exp!r} verified on sampled grid",
            )
        )
    return rows
