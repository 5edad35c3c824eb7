"""Driven qubit in a lossy cavity: exact single-excitation dynamics plus
quantumness and memory diagnostics (Leggett-Garg, quantum witness, coherence,
geometric phase, BLP backflow measure, effective decay rate).

The numerical core (amplitude evaluation on dense grids) runs on a compiled
extension when available and transparently falls back to numpy; see
``drivenqubit.backend.backend_name()``.
"""

from .amplitude import (AmplitudePole, AmplitudeTrajectory, IntegrationError,
                        amplitude_closed_form, amplitude_derivative,
                        amplitude_grid, amplitude_oracle_ode,
                        amplitude_trajectory, decay_rate, decay_rate_grid)
from .backend import backend_name
from .nonmarkov import (BackflowIntervals, BlpResult, antipodal_pair,
                        backflow_intervals, blp_measure, info_flux)
from .params import (DerivedParams, SpectralDensity, SystemParams,
                     ValidationError, derive, kernel, spectral_density)
from .phase import (EigenSystem, eigensystem, geometric_phase,
                    geometric_phase_detailed)
from .states import (BlochVector, QubitState, apply_channel, coherence_l1,
                     evolve_superposition, trace_distance)
from .sweeps import (PRESET_NAMES, SweepAxis, SweepSpec, figure_preset,
                     run_sweep)
from .temporal import (LgiResult, WitnessResult, coherence_monotone, lgi_c3,
                       lgi_c4, propagator, quantum_witness,
                       two_time_correlation, witness_probabilities,
                       witness_series)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "ValidationError",
    "SystemParams",
    "DerivedParams",
    "SpectralDensity",
    "derive",
    "spectral_density",
    "kernel",
    "AmplitudeTrajectory",
    "AmplitudePole",
    "IntegrationError",
    "amplitude_closed_form",
    "amplitude_derivative",
    "amplitude_grid",
    "amplitude_trajectory",
    "amplitude_oracle_ode",
    "decay_rate",
    "decay_rate_grid",
    "QubitState",
    "BlochVector",
    "evolve_superposition",
    "apply_channel",
    "coherence_l1",
    "trace_distance",
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
    "EigenSystem",
    "eigensystem",
    "geometric_phase",
    "geometric_phase_detailed",
    "BackflowIntervals",
    "BlpResult",
    "antipodal_pair",
    "info_flux",
    "backflow_intervals",
    "blp_measure",
    "SweepAxis",
    "SweepSpec",
    "run_sweep",
    "figure_preset",
    "PRESET_NAMES",
]
