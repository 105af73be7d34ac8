"""Shared helpers for building random test instances."""

from __future__ import annotations

import numpy as np

from specbounds import WeightedGraph, random_connected


def random_instance(
    seed: int,
    n_lo: int = 2,
    n_hi: int = 60,
    weight_range: tuple[float, float] = (0.1, 10.0),
    m_weighted: bool = False,
    potential_range: tuple[float, float] | None = None,
) -> WeightedGraph:
    """Random connected graph with its size drawn from the same seed."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_lo, n_hi + 1))
    return random_connected(
        n,
        seed=seed + 1,
        weight_range=weight_range,
        m_range=(0.5, 2.0) if m_weighted else None,
        potential_range=potential_range,
    )


def random_proper_subset(g: WeightedGraph, seed: int) -> tuple[str, ...]:
    """Nonempty proper vertex subset, deterministic in the seed."""
    rng = np.random.default_rng(seed)
    size = int(rng.integers(1, g.n)) if g.n > 1 else 1
    idx = rng.choice(g.n, size=size, replace=False)
    return tuple(g.vertices[int(i)] for i in sorted(idx))
