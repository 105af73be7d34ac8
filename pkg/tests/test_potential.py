"""Ground states, the transform, and the potential Dirichlet bound."""

import numpy as np
import pytest

from specbounds import (
    DoublingUnverified,
    WeightedGraph,
    compute_metric,
    dirichlet_lower_bound,
    ground_state,
    ground_state_transform,
    ground_state_transform_check,
    lattice_box,
    potential_dirichlet_bound,
    random_connected,
    rows_pass,
    validate,
)
from specbounds.spectral import assemble, dirichlet_energy, lowest_eigenvalue
from conftest import random_proper_subset


def _k2_with_potential():
    return WeightedGraph.from_edge_list(
        ("v0", "v1"), 1.0, [("v0", "v1", 1.0)], potential=(0.0, 3.0)
    )


def test_zero_potential_ground_state_is_constant():
    g = random_connected(12, seed=1, m_range=(0.5, 2.0))
    gs = ground_state(g)
    assert np.all(gs.phi == 1.0)
    assert gs.lambda_v == 0.0
    assert gs.c == 1.0


def test_k2_ground_state_closed_form():
    gs = ground_state(_k2_with_potential())
    lam = (5.0 - np.sqrt(13.0)) / 2.0
    assert gs.lambda_v == pytest.approx(lam, rel=1e-12)
    assert np.all(gs.phi > 0.0)
    # phi is proportional to (1, 1 - lam); the pinching constant follows.
    assert gs.c == pytest.approx(np.sqrt(1.0 / (1.0 - lam)), rel=1e-12)
    assert gs.phi.max() * gs.phi.min() == pytest.approx(1.0, rel=1e-12)


def test_constant_potential_shifts_only():
    g = random_connected(10, seed=3, weight_range=(1.0, 1.0))
    shifted = WeightedGraph.from_edge_list(
        g.vertices, 1.0,
        [(g.vertices[i], g.vertices[j], w) for i, j, w in g.edges],
        potential=[0.7] * g.n,
    )
    gs = ground_state(shifted)
    assert gs.lambda_v == pytest.approx(0.7, abs=1e-12)
    assert gs.c == pytest.approx(1.0, abs=1e-9)


def test_measure_matched_shift_covariance():
    g = random_connected(14, seed=5, m_range=(0.5, 2.0), potential_range=(0.0, 2.0))
    kappa = 1.3
    shifted = WeightedGraph.from_edge_list(
        g.vertices,
        list(g.m),
        [(g.vertices[i], g.vertices[j], w) for i, j, w in g.edges],
        potential=list(g.potential + kappa * g.m),
    )
    a, b = ground_state(g), ground_state(shifted)
    assert b.lambda_v == pytest.approx(a.lambda_v + kappa, rel=1e-12)
    assert np.allclose(a.phi, b.phi, rtol=1e-7)


def test_transform_with_constant_state_is_identity():
    g = random_connected(9, seed=8, m_range=(0.5, 2.0))
    gs = ground_state(g)
    h = ground_state_transform(g, gs)
    assert h.edges == g.edges
    assert np.array_equal(h.m, g.m)


def test_transform_metric_and_volume_equivalence():
    g = random_connected(16, seed=11, potential_range=(0.0, 2.0))
    gs = ground_state(g)
    h = ground_state_transform(g, gs)
    validate(h)
    c2 = gs.c * gs.c
    d0 = compute_metric(g).dist
    d1 = compute_metric(h).dist
    off = ~np.eye(g.n, dtype=bool)
    assert np.all(d1[off] <= c2 * d0[off] * (1.0 + 1e-12))
    assert np.all(d1[off] >= d0[off] / c2 * (1.0 - 1e-12))
    rng = np.random.default_rng(0)
    for _ in range(100):
        size = int(rng.integers(1, g.n + 1))
        subset = [g.vertices[i] for i in rng.choice(g.n, size=size, replace=False)]
        v0, v1 = g.vol(subset), h.vol(subset)
        assert v1 <= c2 * v0 * (1.0 + 1e-12)
        assert v1 >= v0 / c2 * (1.0 - 1e-12)


def test_transform_identity_ground_state_saturates():
    g = _k2_with_potential()
    gs = ground_state(g)
    lhs = (
        dirichlet_energy(g, gs.phi, include_potential=True)
        - gs.lambda_v * float(np.sum(gs.phi**2 * g.m))
    )
    rhs = dirichlet_energy(ground_state_transform(g, gs), np.ones(g.n))
    assert abs(lhs) <= 1e-12 and abs(rhs) <= 1e-12


def test_transform_identity_k2_hand_value():
    g = _k2_with_potential()
    gs = ground_state(g)
    f = np.array([1.0, 0.0])
    lhs = (
        dirichlet_energy(g, f, include_potential=True)
        - gs.lambda_v * float(np.sum(f * f * g.m))
    )
    rhs = dirichlet_energy(ground_state_transform(g, gs), f / gs.phi)
    # Both sides equal 1 - lambda_V for this function.
    assert lhs == pytest.approx(1.0 - gs.lambda_v, rel=1e-12)
    assert rhs == pytest.approx(1.0 - gs.lambda_v, rel=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_transform_identity_random_instances(seed):
    g = random_connected(
        12 + seed, seed=seed, m_range=(0.5, 2.0), potential_range=(0.0, 2.0)
    )
    gs = ground_state(g)
    row = ground_state_transform_check(g, gs, samples=40, seed=seed)
    assert row.passed


def test_potential_bound_k2_hand_case():
    g = _k2_with_potential()
    md = compute_metric(g)
    gs = ground_state(g)
    rows = potential_dirichlet_bound(g, md, gs, ("v1",))
    assert rows[0].true_value == 1.0
    c4 = gs.c**4
    want = gs.lambda_v + 1.0 / (c4 * 1.0 * 2.0)
    assert rows[0].bound_value == pytest.approx(want, rel=1e-12)
    assert rows_pass(rows)


def test_zero_potential_reduction_is_bit_exact():
    g = random_connected(18, seed=23, weight_range=(0.5, 4.0))
    md = compute_metric(g)
    d_set = random_proper_subset(g, 3)
    omega = g.complement(d_set)
    gs = ground_state(g)
    pot_rows = potential_dirichlet_bound(g, md, gs, d_set)
    plain_rows = dirichlet_lower_bound(g, md, omega)
    assert pot_rows[0].bound_value == plain_rows[0].bound_value
    assert pot_rows[0].true_value == plain_rows[0].true_value


@pytest.mark.parametrize("seed", range(10))
def test_potential_bound_random_instances(seed):
    rng = np.random.default_rng(500 + seed)
    n = int(rng.integers(4, 30))
    g = random_connected(n, seed=seed, weight_range=(1.0, 1.0), potential_range=(0.0, 2.0))
    md = compute_metric(g)
    d_set = random_proper_subset(g, seed + 1)
    gs = ground_state(g)
    truth = lowest_eigenvalue(assemble(g, omega=g.complement(d_set)))
    rows = potential_dirichlet_bound(g, md, gs, d_set)
    assert rows[0].true_value == pytest.approx(truth)
    assert rows_pass(rows)
    assert rows[0].bound_value > gs.lambda_v


def test_doubling_variant_on_lattice():
    g = lattice_box(2, 6)
    md = compute_metric(g)
    gs = ground_state(g)
    d_set = tuple(v for v in g.vertices if all(int(c) % 3 == 0 for c in v.split(",")))
    rows = potential_dirichlet_bound(g, md, gs, d_set, doubling_exponent=2.0)
    assert len(rows) == 2
    assert rows_pass(rows)
    with pytest.raises(DoublingUnverified):
        potential_dirichlet_bound(g, md, gs, d_set, doubling_exponent=0.0)
