"""Heralded truncation of Fock-diagonal mixed light states.

Simulates a quantum scissors device built from a nondegenerate parametric
amplifier, a beam splitter and two photon-counting detectors: closed-form
heralded states and success probabilities for both detector placements,
Mandel Q and Hellinger non-Gaussianity metrics, and an independent
brute-force simulation that cross-checks every closed form.
"""

from .fock import (
    MetricsReport,
    PhotonNumberDistribution,
    mean_photon,
    phase_diffused_distribution,
    photon_variance,
    poisson_cutoff,
    thermal_cutoff,
    thermal_distribution,
)
from .metrics import (
    hellinger_nongaussianity,
    mandel_q,
    mandel_q_thermal_closed_form,
    metrics_report,
)
from .optics import (
    BeamSplitterParams,
    SqueezerParams,
    TwoModePureState,
    apply_beam_splitter,
    apply_two_mode_squeezer,
    tmsv_amplitude,
    two_mode_vacuum,
)
from .oracle import (
    DEFAULT_CUTOFF,
    DetectionOutcome,
    TripartiteState,
    evolve_component,
    postselect,
    verify_offdiagonal_absence,
)
from .scissors import (
    Placement,
    ScissorsConfig,
    SupportKind,
    TruncatedState,
    UndefinedStateError,
    probability_a,
    probability_b,
    truncated_state_a,
    truncated_state_b,
)
from .sweeps import FIGURES, SweepSpec, run_sweep, write_csv

__version__ = "0.1.0"

__all__ = [
    "BeamSplitterParams",
    "DEFAULT_CUTOFF",
    "DetectionOutcome",
    "FIGURES",
    "MetricsReport",
    "PhotonNumberDistribution",
    "Placement",
    "ScissorsConfig",
    "SqueezerParams",
    "SupportKind",
    "SweepSpec",
    "TripartiteState",
    "TruncatedState",
    "TwoModePureState",
    "UndefinedStateError",
    "apply_beam_splitter",
    "apply_two_mode_squeezer",
    "evolve_component",
    "hellinger_nongaussianity",
    "mandel_q",
    "mandel_q_thermal_closed_form",
    "mean_photon",
    "metrics_report",
    "phase_diffused_distribution",
    "photon_variance",
    "poisson_cutoff",
    "postselect",
    "probability_a",
    "probability_b",
    "run_sweep",
    "thermal_cutoff",
    "thermal_distribution",
    "tmsv_amplitude",
    "truncated_state_a",
    "truncated_state_b",
    "two_mode_vacuum",
    "verify_offdiagonal_absence",
    "write_csv",
    "__version__",
]
