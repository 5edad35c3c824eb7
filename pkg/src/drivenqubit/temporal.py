"""Temporal-quantumness diagnostics: two-time correlators, Leggett-Garg
inequalities, the blind-measurement propagator, the quantum witness and the
coherence-monotone envelope.

Measurement sequences start at t1 = 0 (the dynamics is not stationary), and
two-time quantities are always written with the later time first evaluated:
C(t_i, t_j) uses A(t_later) A*(t_earlier) and A(t_later - t_earlier).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .amplitude import amplitude_closed_form, amplitude_grid
from .params import DerivedParams, ValidationError

__all__ = [
    "LgiResult",
    "WitnessResult",
    "two_time_correlation",
    "lgi_c3",
    "lgi_c4",
    "propagator",
    "quantum_witness",
    "witness_probabilities",
    "witness_series",
    "coherence_monotone",
]


@dataclass(frozen=True)
class LgiResult:
    """Leggett-Garg combinations at step tau; classical bounds c3 <= 1, c4 <= 2."""

    tau: float
    c3: float
    c4: float
    violated3: bool
    violated4: bool


@dataclass(frozen=True)
class WitnessResult:
    """Quantum witness at delay tau; envelope is filled by grid evaluations."""

    tau: float
    w_q: float
    envelope: float = math.nan


def two_time_correlation(dp: DerivedParams, theta: float, t_i: float,
                         t_j: float) -> float:
    """Symmetrized sigma_x correlator between times t_i <= t_j.

    Re[(cos^2(theta) A(t_j)A*(t_i) + sin^2(theta) A(t_j - t_i)) e^{-i w_D (t_j - t_i)}].
    """
    if t_i < 0 or t_j < 0:
        raise ValidationError("measurement times must be >= 0")
    if t_j < t_i:
        raise ValidationError("require t_i <= t_j (earlier measurement first)")
    s = t_j - t_i
    phase = cmath.exp(-1j * dp.omega_d * s)
    val = (
        math.cos(theta) ** 2
        * amplitude_closed_form(dp, t_j)
        * amplitude_closed_form(dp, t_i).conjugate()
        + math.sin(theta) ** 2 * amplitude_closed_form(dp, s)
    ) * phase
    return val.real


def _lgi(dp: DerivedParams, theta: float, tau: float) -> LgiResult:
    if tau < 0:
        raise ValidationError(f"tau must be >= 0, got {tau}")
    c01 = two_time_correlation(dp, theta, 0.0, tau)
    c12 = two_time_correlation(dp, theta, tau, 2 * tau)
    c02 = two_time_correlation(dp, theta, 0.0, 2 * tau)
    c23 = two_time_correlation(dp, theta, 2 * tau, 3 * tau)
    c03 = two_time_correlation(dp, theta, 0.0, 3 * tau)
    c3 = c01 + c12 - c02
    c4 = c01 + c12 + c23 - c03
    return LgiResult(tau=tau, c3=c3, c4=c4, violated3=c3 > 1.0, violated4=c4 > 2.0)


def lgi_c3(dp: DerivedParams, theta: float, tau: float) -> LgiResult:
    """Three-time Leggett-Garg combination C(0,t)+C(t,2t)-C(0,2t)."""
    return _lgi(dp, theta, tau)


def lgi_c4(dp: DerivedParams, theta: float, tau: float) -> LgiResult:
    """Four-time Leggett-Garg combination C(0,t)+C(t,2t)+C(2t,3t)-C(0,3t)."""
    return _lgi(dp, theta, tau)


def propagator(dp: DerivedParams, t: float) -> np.ndarray:
    """Population propagator over the |+->=(|A>+-|B>)/sqrt(2) outcome pair.

    Columns are stochastic: entries in [0, 1], each column summing to 1;
    mixing is controlled by Re A(t).
    """
    if t < 0:
        raise ValidationError(f"t must be >= 0, got {t}")
    re_a = amplitude_closed_form(dp, t).real
    return 0.5 * np.array([[1.0 + re_a, 1.0 - re_a], [1.0 - re_a, 1.0 + re_a]])


def witness_probabilities(dp: DerivedParams, theta: float,
                          tau: float) -> tuple[float, float]:
    """(p_plus, p_plus_blind) at time tau via the propagator route.

    p_plus is the undisturbed probability of the + outcome; p_plus_blind
    inserts a nonselective +/- measurement at tau/2, composing the two
    half-interval propagators.
    """
    if tau < 0:
        raise ValidationError(f"tau must be >= 0, got {tau}")
    p0 = 0.5 * np.array([1.0 + math.sin(2 * theta), 1.0 - math.sin(2 * theta)])
    p_free = propagator(dp, tau) @ p0
    half = propagator(dp, tau / 2.0)
    p_blind = half @ (half @ p0)
    return float(p_free[0]), float(p_blind[0])


def quantum_witness(dp: DerivedParams, theta: float, tau: float) -> WitnessResult:
    """Blind-measurement witness |p_plus - p_plus_blind| in closed form.

    w_q = (1/4)|sin(2 theta) (A(tau) + A*(tau) - (A(tau/2) + A*(tau/2))^2 / 2)|;
    positive values certify coherence at the intermediate time.
    """
    if tau < 0:
        raise ValidationError(f"tau must be >= 0, got {tau}")
    a1 = amplitude_closed_form(dp, tau)
    ah = amplitude_closed_form(dp, tau / 2.0)
    w = abs(math.sin(2 * theta) * (a1 + a1.conjugate() - 0.5 * (ah + ah.conjugate()) ** 2)) / 4.0
    return WitnessResult(tau=tau, w_q=w)


def coherence_monotone(dp: DerivedParams, taus) -> np.ndarray:
    """Upper envelope of |A(tau)|/2 on the given grid.

    Piecewise-linear interpolation through the interior local maxima of
    |A|/2 (grid endpoints included as knots), clipped from below by the
    curve itself so the envelope never dips under it.  Without interior
    maxima (monotone decay) the envelope degenerates to the curve.
    """
    taus = np.asarray(taus, dtype=float)
    if taus.ndim != 1 or taus.size < 3:
        raise ValidationError("need a grid of at least 3 points")
    if taus[0] != 0.0 or np.any(np.diff(taus) <= 0):
        raise ValidationError("grid must be strictly increasing from 0")
    A, _ = amplitude_grid(dp, taus)
    half = 0.5 * np.abs(A)
    interior = 1 + np.flatnonzero(
        (half[1:-1] > half[:-2]) & (half[1:-1] >= half[2:])
    )
    if interior.size == 0:
        return half
    knots = np.concatenate(([0], interior, [taus.size - 1]))
    env = np.interp(taus, taus[knots], half[knots])
    return np.maximum(env, half)


def witness_series(dp: DerivedParams, theta: float, taus):
    """(w_q, envelope) arrays over a tau grid; the envelope is the
    coherence monotone computed on the same grid."""
    taus = np.asarray(taus, dtype=float)
    A1, _ = amplitude_grid(dp, taus)
    Ah, _ = amplitude_grid(dp, taus / 2.0)
    w = np.abs(math.sin(2 * theta) * (2.0 * A1.real - 2.0 * Ah.real**2)) / 4.0
    return w, coherence_monotone(dp, taus)
