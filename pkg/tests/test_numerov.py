import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weberbox import numerov
from weberbox.numerov import GridSpec, RadialProblem, ShootingError, SymmetricProblem, integrate, shoot_eigenvalue
from weberbox.potentials import CoulombPiecewise, PiecewisePotential
from weberbox.weber import eval_decaying


def free(z):
    return np.zeros_like(np.asarray(z, dtype=float))


def test_gridspec_validation():
    g = GridSpec(0.0, 1.0, 0.1)
    assert g.n_steps == 10 and len(g.points()) == 11
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.05, 0.1)
    with pytest.raises(ValueError):
        GridSpec(0.0, 0.5, 0.1)
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, 0.0)
    c = GridSpec.covering(-0.1, 3.333, 0.1)
    assert c.z_end >= 3.333 and c.n_steps == 35


def test_free_particle_sine():
    h = 1e-3
    g = GridSpec(0.0, 3.141, h)
    psi = integrate(free, 1.0, g, "right", (0.0, math.sin(h)))
    assert np.max(np.abs(psi - np.sin(g.points()))) < 1e-10


def test_harmonic_ground_state_inward():
    h = 1e-3
    pot = PiecewisePotential(0.0)
    g = GridSpec(0.0, 10.0, h)
    z = g.points()
    psi = integrate(pot, 0.5, g, "left", (math.exp(-25.0), math.exp(-z[-2] ** 2 / 4)))
    assert psi[0] == pytest.approx(1.0, rel=1e-7)
    assert np.allclose(psi, np.exp(-z * z / 4), rtol=1e-7, atol=0)


def test_bad_arguments():
    g = GridSpec(0.0, 1.0, 0.01)
    with pytest.raises(ValueError):
        integrate(free, 1.0, g, "up")
    with pytest.raises(ValueError):
        integrate(free, 1.0, g, "right", (0.0, 0.0))


@settings(max_examples=25, deadline=None)
@given(st.floats(-50, 50).filter(lambda a: abs(a) > 1e-6), st.floats(0.1, 4.0))
def test_linearity(alpha, energy):
    pot = PiecewisePotential(1.0)
    g = GridSpec(0.0, 6.0, 1e-2)
    a = integrate(pot, energy, g, "right", (0.3, 0.31))
    b = integrate(pot, energy, g, "right", (0.3 * alpha, 0.31 * alpha))
    assert np.max(np.abs(b - alpha * a)) <= 1e-11 * np.max(np.abs(alpha * a))


def test_linearity_exact_for_powers_of_two():
    pot = PiecewisePotential(0.7)
    g = GridSpec(-5.0, 5.0, 1e-3)
    a = integrate(pot, 1.3, g, "right", (1e-3, 1.1e-3))
    b = integrate(pot, 1.3, g, "right", (4e-3, 4.4e-3))
    assert np.array_equal(b, 4 * a)


def test_rescaling_keeps_finite():
    g = GridSpec(0.0, 40.0, 1e-3)
    psi = integrate(PiecewisePotential(0.0), 0.7, g, "right", (1.0, 1.0))
    assert np.all(np.isfinite(psi))


@pytest.mark.parametrize("l", [1.0, 2.5])
def test_bathtub_wall_matches_series_both_directions(l, decaying_oracle):
    e = 0.9
    h = 1e-3
    y, psi = decaying_oracle(e, l=l, y_end=12.0, h=h)
    ref = np.array([eval_decaying(e, yy)[0] for yy in y[:5001]])
    scale = ref[0] / psi[0]
    assert np.max(np.abs(scale * psi[:5001] - ref) / np.abs(ref)) < 1e-6
    # outward from the series values at y = 0, h
    g = GridSpec(l, l + 5.0, h)
    out = integrate(PiecewisePotential(l), e, g, "right", (ref[0], ref[1]))
    assert np.max(np.abs(out - ref)) < 1e-6 * np.max(np.abs(ref))


def test_shoot_harmonic_ground():
    prob = SymmetricProblem(PiecewisePotential(0.0), "even", 2.0)
    res = shoot_eigenvalue(prob, (0.3, 0.7))
    assert res.converged
    assert res.energy == pytest.approx(0.5, abs=1e-6)
    prob = SymmetricProblem(PiecewisePotential(0.0), "odd", 2.0)
    assert shoot_eigenvalue(prob, (1.3, 1.7)).energy == pytest.approx(1.5, abs=1e-6)


def test_shoot_needs_sign_change():
    prob = SymmetricProblem(PiecewisePotential(0.0), "even", 2.0)
    with pytest.raises(ShootingError):
        shoot_eigenvalue(prob, (0.6, 0.7))


def test_converged_means_small_mismatch_or_pinned_root():
    prob = SymmetricProblem(PiecewisePotential(3.0), "even", 3.0)
    levels = numerov.symmetric_levels(PiecewisePotential(3.0), 3)
    e = [x for x, p in levels if p == "even"][0]
    res = shoot_eigenvalue(prob, (e - 0.01, e + 0.01))
    assert res.converged
    d = 1e-10 * max(1.0, abs(res.energy))
    assert abs(res.mismatch) < 1e-9 or prob.mismatch(res.energy - d) * prob.mismatch(res.energy + d) <= 0


def test_critical_width_second_even_state():
    prob = SymmetricProblem(PiecewisePotential(1.28), "even", 3.0)
    res = shoot_eigenvalue(prob, (1.2, 2.0))
    assert res.energy == pytest.approx(1.5, abs=0.02)


def test_harmonic_levels():
    levels = numerov.bathtub_levels(0.0, 5)
    assert np.allclose(levels, np.arange(6) + 0.5, atol=1e-8)


def test_fourth_order_convergence():
    errs = []
    for h in (0.1, 0.05, 0.025):
        e = numerov.bathtub_levels(0.0, 0, h=h)[0]
        errs.append(abs(e - 0.5))
    r1, r2 = errs[0] / errs[1], errs[1] / errs[2]
    assert 12 < r1 < 20 and 12 < r2 < 20


def test_coulomb_pure_ground_and_pattern():
    levels = numerov.coulomb_piecewise_levels(1.0, 0.0, 0, 4)
    exact = [-1 / (4 * n * n) for n in range(1, 5)]
    assert levels[0] == pytest.approx(-0.25, rel=1e-5)
    assert np.allclose(levels, exact, rtol=1e-4, atol=0)


def test_coulomb_angular_momentum_shift():
    lv = numerov.coulomb_piecewise_levels(1.0, 0.0, 1, 2)
    assert lv[0] == pytest.approx(-1 / 16, rel=1e-4)
    assert lv[1] == pytest.approx(-1 / 36, rel=1e-4)


def test_coulomb_scaling_with_k():
    lv = numerov.coulomb_piecewise_levels(2.0, 0.0, 0, 2)
    assert np.allclose(lv, [-1.0, -0.25], rtol=1e-4)


def test_coulomb_monotone_in_R():
    table = [numerov.coulomb_piecewise_levels(1.0, R, 0, 3) for R in (0.0, 0.5, 1.0, 2.0)]
    for lo, hi in zip(table, table[1:]):
        assert all(a <= b for a, b in zip(lo, hi))
    assert all(b > a for a, b in zip(table[0], table[-1]))


def test_frobenius_seed_regular():
    pot = CoulombPiecewise(1.0, 0.0, 2)
    assert pot.frobenius(-0.1, 1e-3) == pytest.approx(1e-9, rel=1e-3)


def test_radial_problem_requires_bound_energy():
    with pytest.raises(ValueError):
        RadialProblem(CoulombPiecewise(1.0), 0.1)
