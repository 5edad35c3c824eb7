import math

import numpy as np
import pytest
from scipy.integrate import quad

from drivenqubit import (SystemParams, ValidationError, derive, eigensystem,
                         evolve_superposition, geometric_phase,
                         geometric_phase_detailed)
from drivenqubit.amplitude import amplitude_closed_form
from drivenqubit.phase import _cos2_integrand
from drivenqubit.quadrature import adaptive_simpson


def test_eigensystem_initial_pure_state():
    dp = derive(SystemParams(lam=0.1, omega_rabi=0.5))
    for theta in (0.0, 0.3, math.pi / 4, 1.2):
        es = eigensystem(dp, theta, 0.0)
        assert es.eps_plus == pytest.approx(1.0, abs=1e-12)
        assert es.eps_minus == pytest.approx(0.0, abs=1e-12)
        assert es.cos_theta_big == pytest.approx(math.cos(theta), abs=1e-12)


def test_eigensystem_diagonal_branch():
    dp = derive(SystemParams(lam=0.01, omega_rabi=0.3))
    es_early = eigensystem(dp, 0.0, 0.1)  # |A|^2 still above 1/2
    assert es_early.cos_theta_big == 1.0
    assert abs(amplitude_closed_form(dp, 0.1)) ** 2 > 0.5


def test_eigensystem_sum_and_positivity():
    rng = np.random.default_rng(51)
    for _ in range(50):
        p = SystemParams(lam=float(10 ** rng.uniform(-2, 0.3)),
                         omega_rabi=float(rng.uniform(0, 2)),
                         delta_qc=float(rng.uniform(-5, 5)))
        dp = derive(p)
        theta = float(rng.uniform(0, math.pi / 2))
        es = eigensystem(dp, theta, float(rng.uniform(0, 30)))
        assert es.eps_plus + es.eps_minus == pytest.approx(1.0, abs=1e-12)
        assert es.eps_plus >= es.eps_minus >= -1e-12
        assert -1.0 <= es.cos_theta_big <= 1.0
        vp, vm = es.vector_plus(), es.vector_minus()
        assert abs(np.vdot(vp, vp) - 1) < 1e-12
        assert abs(np.vdot(vm, vm) - 1) < 1e-12
        assert abs(np.vdot(vp, vm)) < 1e-12


def test_spectral_reconstruction_random():
    rng = np.random.default_rng(53)
    for _ in range(60):
        p = SystemParams(lam=float(10 ** rng.uniform(-2, 0.3)),
                         omega_rabi=float(rng.uniform(0, 2)),
                         delta_qc=float(rng.uniform(-5, 5)))
        dp = derive(p)
        theta = float(rng.uniform(0, math.pi / 2))
        t = float(rng.uniform(0, 30))
        es = eigensystem(dp, theta, t)
        rho = evolve_superposition(dp, theta, t).rho
        assert np.max(np.abs(es.reconstruct() - rho)) <= 1e-12


def test_degeneracy_flag_at_crossing():
    # theta = 0 and |A|^2 = 1/2 is the only true crossing of the spectrum
    dp = derive(SystemParams(lam=0.2, omega_rabi=0.0))
    lo, hi = 0.0, 30.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if abs(amplitude_closed_form(dp, mid)) ** 2 > 0.5:
            lo = mid
        else:
            hi = mid
    es = eigensystem(dp, 0.0, 0.5 * (lo + hi))
    assert es.degenerate
    assert not eigensystem(dp, 0.0, 0.0).degenerate


def test_geometric_phase_unitary_limit():
    dp = derive(SystemParams(lam=0.01, omega_rabi=0.1, gamma=1e-12))
    val = geometric_phase(dp, math.pi / 6)
    assert val == pytest.approx(2 * math.pi * math.cos(math.pi / 6) ** 2, abs=1e-4)
    assert val == pytest.approx(1.5 * math.pi, abs=1e-4)


def test_geometric_phase_dark_state_vanishes():
    dp = derive(SystemParams(lam=0.1, omega_rabi=0.5))
    assert geometric_phase(dp, math.pi / 2) == pytest.approx(0.0, abs=1e-12)


def test_geometric_phase_rejects_undefined_period():
    dp = derive(SystemParams(lam=0.1, omega_rabi=0.0, delta_qc=0.0))
    with pytest.raises(ValidationError):
        geometric_phase(dp, math.pi / 6)


def test_geometric_phase_range_and_nodes():
    dp = derive(SystemParams(lam=0.1, omega_rabi=0.3))
    val, err, nodes = geometric_phase_detailed(dp, math.pi / 6)
    assert 0.0 <= val <= 2 * math.pi
    assert err < 1e-8
    assert nodes.min() >= 0.0 and nodes.max() <= 2 * math.pi / dp.omega_d + 1e-12
    # spectral decomposition must hold at every node the integral touched
    for t in nodes:
        es = eigensystem(dp, math.pi / 6, float(t))
        rho = evolve_superposition(dp, math.pi / 6, float(t)).rho
        assert np.max(np.abs(es.reconstruct() - rho)) <= 1e-12


def test_geometric_phase_decreases_with_spectral_width():
    phi_narrow = geometric_phase(derive(SystemParams(lam=0.01, omega_rabi=0.1)),
                                 math.pi / 6)
    phi_wide = geometric_phase(derive(SystemParams(lam=1.0, omega_rabi=0.1)),
                               math.pi / 6)
    assert phi_wide < phi_narrow


def test_geometric_phase_strong_drive_beats_weak_drive():
    phi_weak = geometric_phase(derive(SystemParams(lam=0.1, omega_rabi=0.1)),
                               math.pi / 6)
    phi_strong = geometric_phase(derive(SystemParams(lam=0.1, omega_rabi=1.0)),
                                 math.pi / 6)
    assert phi_strong > phi_weak
    assert phi_strong == pytest.approx(1.5 * math.pi, rel=0.05)


def test_geometric_phase_detuning_stabilizes_at_wide_cavity():
    phi_near = geometric_phase(derive(SystemParams(lam=1.0, omega_rabi=0.1,
                                                   delta_qc=0.1)), math.pi / 6)
    phi_far = geometric_phase(derive(SystemParams(lam=1.0, omega_rabi=0.1,
                                                  delta_qc=1.0)), math.pi / 6)
    assert phi_far > phi_near


def test_quadrature_against_scipy():
    dp = derive(SystemParams(lam=0.1, omega_rabi=0.2, delta_qc=0.3))
    f = _cos2_integrand(dp, math.pi / 6)
    period = 2 * math.pi / dp.omega_d
    ours, _, _ = adaptive_simpson(f, 0.0, period, tol=1e-10)
    ref, _ = quad(f, 0.0, period, epsabs=1e-12, epsrel=1e-12, limit=400)
    assert ours == pytest.approx(ref, abs=1e-9)


def test_quadrature_known_integrals():
    val, err, nodes = adaptive_simpson(math.sin, 0.0, math.pi, tol=1e-12)
    assert val == pytest.approx(2.0, abs=1e-11)
    assert len(nodes) >= 5
    val2, _, _ = adaptive_simpson(lambda x: math.exp(-x * x), -8.0, 8.0, tol=1e-12)
    assert val2 == pytest.approx(math.sqrt(math.pi), abs=1e-10)
