"""Closed-form output states of the scissors device for both detector placements.

The device feeds two vacua and a Fock-diagonal input through a
nondegenerate amplifier and a beam splitter, then post-selects on counting
N photons at one monitored port and zero at the other.  Detecting at the
two splitter outputs leaves a state supported on {0..N} (max-Fock
truncation); detecting at the amplifier output and one splitter output
leaves a state supported on {N, N+1, ...} (min-Fock truncation, i.e.
removal of every component below N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .fock import PhotonNumberDistribution
from .optics import BeamSplitterParams, SqueezerParams

__all__ = [
    "UndefinedStateError",
    "Placement",
    "SupportKind",
    "ScissorsConfig",
    "TruncatedState",
    "truncated_state_a",
    "probability_a",
    "truncated_state_b",
    "probability_b",
]


class UndefinedStateError(ValueError):
    """Post-selecting on a zero-probability outcome leaves no conditional state."""


class Placement(Enum):
    """Which two output ports carry the photodetectors.

    BOUT_COUT: both splitter outputs are monitored; the state exits the
    amplifier port.  AOUT_COUT: the amplifier output and the second
    splitter output are monitored; the state exits the first splitter port.
    """

    BOUT_COUT = "bout_cout"
    AOUT_COUT = "aout_cout"


class SupportKind(Enum):
    MAX_FOCK = "max_fock"
    MIN_FOCK = "min_fock"


@dataclass(frozen=True)
class ScissorsConfig:
    """Device settings: amplifier drive, splitter angle, detected count and
    detector placement."""

    sq: SqueezerParams
    bs: BeamSplitterParams
    detected_n: int
    placement: Placement

    def __post_init__(self):
        if self.detected_n < 0:
            raise ValueError("detected photon count must be nonnegative")


@dataclass(frozen=True)
class TruncatedState:
    """Conditional output state plus the probability of heralding it.

    ``fock_bound`` is the truncation edge: the largest occupied level for
    MAX_FOCK support, the smallest for MIN_FOCK support.
    """

    dist: PhotonNumberDistribution
    probability: float
    support: SupportKind
    fock_bound: int

    def __post_init__(self):
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError("probability must lie in [0, 1]")


def _coefficients(cfg: ScissorsConfig) -> tuple[float, float, float, float]:
    sech2 = 1.0 / math.cosh(cfg.sq.s) ** 2
    tanh2 = math.tanh(cfg.sq.s) ** 2
    trans2 = abs(cfg.bs.transmittance) ** 2
    refl2 = abs(cfg.bs.reflectance) ** 2
    return sech2, tanh2, trans2, refl2


def _weights_a(dist: PhotonNumberDistribution, cfg: ScissorsConfig) -> np.ndarray:
    if cfg.placement is not Placement.BOUT_COUT:
        raise ValueError("max-Fock truncation needs detectors on both splitter outputs")
    n_det = cfg.detected_n
    if dist.cutoff < n_det:
        raise ValueError(
            f"input distribution stores photon numbers up to {dist.cutoff}, "
            f"but {n_det} detections require entries up to {n_det}"
        )
    sech2, tanh2, trans2, refl2 = _coefficients(cfg)
    # weight of the k-photon output: choose(N, k) rho_{N-k} tanh^{2k} |T|^{2k} |R|^{2(N-k)}
    weights = np.empty(n_det + 1)
    for k in range(n_det + 1):
        weights[k] = (
            sech2
            * math.comb(n_det, k)
            * dist.probs[n_det - k]
            * tanh2**k
            * trans2**k
            * refl2 ** (n_det - k)
        )
    return weights


def probability_a(dist: PhotonNumberDistribution, cfg: ScissorsConfig) -> float:
    """Probability of detecting (N, 0) photons at the two splitter outputs."""
    return float(_weights_a(dist, cfg).sum())


def truncated_state_a(dist: PhotonNumberDistribution, cfg: ScissorsConfig) -> TruncatedState:
    """Max-Fock truncated state heralded by (N, 0) counts at the splitter outputs.

    The output is supported on photon numbers {0..N} and never depends on
    the pump phase.  Raises :class:`UndefinedStateError` when the heralding
    probability vanishes (for example s = 0 with no N-photon component in
    the input).
    """
    weights = _weights_a(dist, cfg)
    prob = float(weights.sum())
    if prob == 0.0:
        raise UndefinedStateError("heralding probability is zero; no output state exists")
    out = PhotonNumberDistribution(weights / prob)
    return TruncatedState(out, prob, SupportKind.MAX_FOCK, cfg.detected_n)


def _weights_b(
    dist: PhotonNumberDistribution, cfg: ScissorsConfig, cutoff: int | None
) -> tuple[np.ndarray, float]:
    """Min-Fock weights over input index n, plus an upper bound on the
    weight missing above the stored range."""
    if cfg.placement is not Placement.AOUT_COUT:
        raise ValueError("min-Fock truncation needs detectors at the amplifier and splitter outputs")
    n_det = cfg.detected_n
    sech2, tanh2, trans2, refl2 = _coefficients(cfg)
    prefactor = sech2 * tanh2**n_det * trans2**n_det

    if cutoff is None:
        n_max = dist.cutoff
    else:
        if cutoff < n_det:
            raise ValueError("output cutoff must be at least the detected photon count")
        n_max = min(dist.cutoff, cutoff - n_det)

    factors = np.array([math.comb(n + n_det, n_det) * refl2**n for n in range(n_max + 1)])
    weights = prefactor * factors * dist.probs[: n_max + 1]

    # mass beyond the retained range: stored entries dropped by an explicit
    # cutoff are summed exactly; the input tail is bounded by the largest
    # retained weight factor (valid once the cutoff is past the factor peak)
    missing = prefactor * float(
        sum(
            math.comb(n + n_det, n_det) * refl2**n * dist.probs[n]
            for n in range(n_max + 1, dist.cutoff + 1)
        )
    )
    missing += prefactor * dist.tail_mass * float(factors.max())
    return weights, missing


def probability_b(
    dist: PhotonNumberDistribution, cfg: ScissorsConfig, cutoff: int | None = None
) -> float:
    """Probability of detecting (N, 0) photons at the amplifier and splitter outputs.

    The sum runs over the input's stored entries (up to ``cutoff - N`` when
    a cutoff is given); the mass above that range is bounded separately and
    reported through the heralded state's ``tail_mass``, not added here.
    """
    weights, _ = _weights_b(dist, cfg, cutoff)
    return float(weights.sum())


def truncated_state_b(
    dist: PhotonNumberDistribution, cfg: ScissorsConfig, cutoff: int | None = None
) -> TruncatedState:
    """Min-Fock truncated state heralded by (N, 0) counts at the amplifier
    and splitter outputs.

    Every photon number below N is removed exactly; the output support is
    {N, ..., N + n_max} where n_max is the retained input range.  The
    returned distribution's ``tail_mass`` carries the (normalized) bound on
    the weight lost to truncation.
    """
    n_det = cfg.detected_n
    weights, missing = _weights_b(dist, cfg, cutoff)
    prob = float(weights.sum())
    if prob == 0.0:
        raise UndefinedStateError("heralding probability is zero; no output state exists")
    probs = np.zeros(n_det + weights.size)
    probs[n_det:] = weights / prob
    out = PhotonNumberDistribution(probs, tail_mass=missing / prob)
    return TruncatedState(out, prob, SupportKind.MIN_FOCK, n_det)
