"""Brute-force simulation of the scissors device, for validating the closed forms.

Instead of evaluating the heralded-state formulas, this module evolves each
Fock component of the input through the amplifier and the beam splitter by
explicit operator action, projects the monitored ports onto the detection
counts, and classically mixes the surviving components.  Agreement between
this route and the closed forms is the strongest correctness check the
package has, so nothing here may share numerics with
:mod:`qscissors.scissors`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fock import PhotonNumberDistribution
from .optics import (
    BeamSplitterParams,
    SqueezerParams,
    TwoModePureState,
    apply_beam_splitter,
    apply_two_mode_squeezer,
    two_mode_vacuum,
)
from .scissors import Placement, UndefinedStateError

__all__ = [
    "TripartiteState",
    "DetectionOutcome",
    "DEFAULT_CUTOFF",
    "evolve_component",
    "postselect",
    "verify_offdiagonal_absence",
]

#: Per-mode Fock cutoff; ample for s <= 1.5 at the tolerances used in tests.
DEFAULT_CUTOFF = 30

_OFFDIAG_TOL = 1e-12
_AMP_EPS = 1e-16


@dataclass(frozen=True)
class TripartiteState:
    """Sparse three-mode pure state: (n_a, n_b, n_c) photon triples to amplitudes."""

    amps: dict[tuple[int, int, int], complex]
    cutoff: int
    truncation_warning: bool = False

    def norm_squared(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.amps.values()))


@dataclass(frozen=True)
class DetectionOutcome:
    """Detection pattern: ``detected_n`` photons at the first monitored port
    of ``placement`` and zero photons at the second (always the splitter
    output facing the input port)."""

    placement: Placement
    detected_n: int

    def __post_init__(self):
        if self.detected_n < 0:
            raise ValueError("detected photon count must be nonnegative")


@lru_cache(maxsize=256)
def evolve_component(
    n: int, sq: SqueezerParams, bs: BeamSplitterParams, cutoff: int = DEFAULT_CUTOFF
) -> TripartiteState:
    """Evolve |0, 0, n>: squeeze modes (a, b), then split modes (b, c).

    The amplifier sum over created pair numbers is truncated at ``cutoff``;
    the splitter conserves photon number exactly, so indices in its two
    modes may exceed ``cutoff`` without loss.  A truncation warning is
    recorded on the result when the retained norm drops by more than 1e-10,
    and strengths past s = 2 are refused at the default cutoff because the
    pair-number tail then decays too slowly to be meaningfully truncated.
    """
    if n < 0 or n > cutoff:
        raise ValueError("input photon number must lie within the cutoff")
    if sq.s > 2.0 and cutoff <= DEFAULT_CUTOFF:
        raise ValueError("cutoff too small for s > 2; raise the cutoff explicitly")
    pairs = apply_two_mode_squeezer(two_mode_vacuum(cutoff), sq, cutoff)
    amps: dict[tuple[int, int, int], complex] = {}
    for (k_a, k_b), pair_amp in pairs.amps.items():
        split = apply_beam_splitter(
            TwoModePureState({(k_b, n): 1.0 + 0.0j}, cutoff=k_b + n), bs
        )
        for (j, l), u in split.amps.items():
            key = (k_a, j, l)
            value = amps.get(key, 0.0j) + pair_amp * u
            amps[key] = value
    amps = {k: a for k, a in amps.items() if abs(a) > _AMP_EPS}
    return TripartiteState(amps, cutoff=cutoff, truncation_warning=pairs.truncation_warning)


def _conditional_density(
    dist: PhotonNumberDistribution,
    sq: SqueezerParams,
    bs: BeamSplitterParams,
    outcome: DetectionOutcome,
    cutoff: int,
) -> tuple[np.ndarray, float]:
    """Unnormalized conditional density matrix of the unmonitored mode and
    the outcome probability, mixed component by component."""
    if dist.cutoff > cutoff:
        raise ValueError(
            f"evolution cutoff {cutoff} does not cover the input's stored "
            f"components (cutoff {dist.cutoff}); raise it or trim the input"
        )
    n_det = outcome.detected_n
    size = 2 * cutoff + 2
    rho = np.zeros((size, size), dtype=complex)
    for n, weight in enumerate(dist.probs):
        if weight == 0.0:
            continue
        tri = evolve_component(n, sq, bs, cutoff)
        vec = np.zeros(size, dtype=complex)
        for (n_a, n_b, n_c), amp in tri.amps.items():
            if outcome.placement is Placement.BOUT_COUT:
                if n_b == n_det and n_c == 0:
                    vec[n_a] += amp
            else:
                if n_a == n_det and n_c == 0:
                    vec[n_b] += amp
        rho += weight * np.outer(vec, vec.conj())
    prob = float(np.trace(rho).real)
    return rho, prob


def _trim(matrix: np.ndarray) -> np.ndarray:
    occupied = np.nonzero(np.abs(np.diagonal(matrix)) > 0.0)[0]
    last = int(occupied[-1]) if occupied.size else 0
    return matrix[: last + 1, : last + 1]


def postselect(
    dist: PhotonNumberDistribution,
    sq: SqueezerParams,
    bs: BeamSplitterParams,
    outcome: DetectionOutcome,
    cutoff: int = DEFAULT_CUTOFF,
) -> tuple[PhotonNumberDistribution, float]:
    """Condition the evolved mixture on the detection outcome.

    Returns the photon-number distribution of the unmonitored mode and the
    outcome probability.  Raises :class:`UndefinedStateError` on a
    zero-probability outcome, mirroring the closed-form route.
    """
    rho, prob = _conditional_density(dist, sq, bs, outcome, cutoff)
    if prob == 0.0:
        raise UndefinedStateError("detection outcome has zero probability")
    diag = np.diagonal(_trim(rho)).real / prob
    return PhotonNumberDistribution(diag), prob


def verify_offdiagonal_absence(
    dist: PhotonNumberDistribution,
    sq: SqueezerParams,
    bs: BeamSplitterParams,
    outcome: DetectionOutcome,
    cutoff: int = DEFAULT_CUTOFF,
) -> bool:
    """True when the conditional state carries no coherences, i.e. every
    off-diagonal element of the normalized conditional density matrix stays
    below 1e-12 (vacuously true for a zero-probability outcome)."""
    rho, prob = _conditional_density(dist, sq, bs, outcome, cutoff)
    if prob == 0.0:
        return True
    rho = _trim(rho) / prob
    offdiag = rho - np.diag(np.diagonal(rho))
    return bool(np.max(np.abs(offdiag)) < _OFFDIAG_TOL)
