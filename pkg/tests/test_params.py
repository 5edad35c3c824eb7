import math

import numpy as np
import pytest
from scipy.integrate import quad

from drivenqubit import (SpectralDensity, SystemParams, ValidationError,
                         derive, kernel, spectral_density)
from drivenqubit.quadrature import adaptive_simpson


def test_derive_resonant_drive():
    dp = derive(SystemParams(lam=0.01, omega_rabi=0.1, delta_qc=0.0))
    assert dp.omega_d == pytest.approx(0.2, abs=1e-15)
    assert dp.eta == pytest.approx(math.pi / 2, abs=1e-15)


def test_derive_undriven_resonant_constants():
    dp = derive(SystemParams(lam=0.01, omega_rabi=0.0))
    assert dp.eta == 0.0
    assert dp.m_const == pytest.approx(0.01 + 0j, abs=1e-15)
    # 4 M^2 - 8 gamma lam < 0: purely imaginary root
    assert dp.f_const.real == pytest.approx(0.0, abs=1e-15)
    assert dp.f_const.imag == pytest.approx(math.sqrt(8 * 0.01 - 4 * 0.01**2), rel=1e-12)


def test_derive_detuned():
    dp = derive(SystemParams(lam=0.01, omega_rabi=0.1, delta_qc=0.1))
    assert dp.omega_d == pytest.approx(math.sqrt(0.01 + 0.04), rel=1e-12)


def test_derive_rejects_bad_rates():
    with pytest.raises(ValidationError):
        SystemParams(lam=0.0)
    with pytest.raises(ValidationError):
        SystemParams(lam=0.1, gamma=-1.0)
    with pytest.raises(ValidationError):
        SystemParams(lam=0.1, omega_rabi=-0.5)
    with pytest.raises(ValidationError):
        SystemParams(lam=0.1, theta=2.0)


def test_re_m_equals_lam_everywhere():
    rng = np.random.default_rng(7)
    for _ in range(50):
        p = SystemParams(
            lam=float(10 ** rng.uniform(-2, 1)),
            omega_rabi=float(rng.uniform(0, 5)),
            delta_qc=float(rng.uniform(-10, 10)),
            delta_cav=float(rng.uniform(-2, 2)),
        )
        assert derive(p).m_const.real == p.lam


def test_omega_d_zero_iff_undriven_resonant():
    assert derive(SystemParams(lam=0.1)).omega_d == 0.0
    assert "period undefined" in " ".join(derive(SystemParams(lam=0.1)).flags())
    assert derive(SystemParams(lam=0.1, omega_rabi=1e-9)).omega_d > 0
    assert derive(SystemParams(lam=0.1, delta_qc=1e-9)).omega_d > 0


def test_regime_warnings():
    assert SystemParams(lam=0.01).warnings() == ()
    assert any("lam" in w for w in SystemParams(lam=2.0).warnings())
    assert any("omega" in w for w in SystemParams(lam=0.01, omega_rabi=20.0).warnings())
    assert any("delta" in w for w in SystemParams(lam=0.01, delta_qc=-20.0).warnings())


def test_spectral_density_peak_and_halfwidth():
    sd = SpectralDensity(center_offset=0.0, width=0.5, strength=1.0)
    assert spectral_density(sd, 0.0) == pytest.approx(1.0 / (2 * math.pi), rel=1e-14)
    assert spectral_density(sd, 0.5) == pytest.approx(1.0 / (4 * math.pi), rel=1e-14)
    shifted = SpectralDensity(center_offset=0.3, width=0.5, strength=1.0)
    assert spectral_density(shifted, 0.3) == pytest.approx(1.0 / (2 * math.pi), rel=1e-14)


def test_spectral_density_positive():
    sd = SpectralDensity(center_offset=-0.2, width=0.05, strength=2.0)
    for w in np.linspace(-50, 50, 101):
        assert spectral_density(sd, float(w)) > 0.0


def test_spectral_density_total_weight_by_quadrature():
    sd = SpectralDensity(center_offset=0.0, width=0.03, strength=1.0)
    val, _ = quad(lambda w: spectral_density(sd, w), -np.inf, np.inf)
    assert val == pytest.approx(sd.total_weight, rel=1e-6)
    # finite window of +-200 widths captures all but ~0.3%
    win, _ = quad(lambda w: spectral_density(sd, w), -200 * sd.width, 200 * sd.width,
                  limit=200)
    assert win == pytest.approx(sd.total_weight, rel=1e-2)


def test_spectral_weight_matches_kernel_at_zero_delay():
    p = SystemParams(lam=0.25, omega_rabi=0.7, delta_qc=0.4, delta_cav=0.1)
    dp = derive(p)
    sd = SpectralDensity.from_params(p)
    val, _, _ = adaptive_simpson(
        lambda w: spectral_density(sd, w), -400 * p.lam, 400 * p.lam, tol=1e-12)
    # the missing Lorentzian tails are ~1/(200 pi) of the total
    assert val == pytest.approx(kernel(dp, 0.0).real, rel=2e-3)
    assert kernel(dp, 0.0) == pytest.approx(sd.total_weight + 0j, rel=1e-12)


def test_kernel_decay_and_monotonicity():
    dp = derive(SystemParams(lam=0.01, omega_rabi=0.0))
    assert kernel(dp, 0.0) == pytest.approx(0.005 + 0j, rel=1e-14)
    assert kernel(dp, 1.0) == pytest.approx(0.005 * math.exp(-0.01) + 0j, rel=1e-13)
    dp2 = derive(SystemParams(lam=0.3, omega_rabi=1.3, delta_qc=-0.4, delta_cav=0.2))
    mags = [abs(kernel(dp2, dt)) for dt in np.linspace(0, 20, 200)]
    assert all(b <= a + 1e-15 for a, b in zip(mags, mags[1:]))
    with pytest.raises(ValidationError):
        kernel(dp, -0.1)
