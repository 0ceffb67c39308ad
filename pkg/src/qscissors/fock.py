"""Fock-diagonal single-mode states and their photon-number statistics.

A state that is diagonal in the photon-number basis is fully described by
its photon-number distribution.  This module provides the distribution
container, constructors for the two canonical mixed inputs (thermal and
phase-diffused coherent light), and the first two moments of the photon
number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PhotonNumberDistribution",
    "MetricsReport",
    "thermal_distribution",
    "phase_diffused_distribution",
    "thermal_cutoff",
    "poisson_cutoff",
    "mean_photon",
    "photon_variance",
]

#: Default bound on the probability mass left above an adaptively chosen cutoff.
DEFAULT_TAIL_TOL = 1e-12

_POISSON_CUTOFF_CAP = 100_000


@dataclass(frozen=True)
class PhotonNumberDistribution:
    """Photon-number probabilities of a Fock-diagonal single-mode state.

    ``probs[n]`` is the weight of the n-photon component.  Anything above
    the stored cutoff is summarized by ``tail_mass``, an estimate (or upper
    bound) of the probability left beyond ``cutoff``.  The constructors in
    this module produce distributions whose ``sum(probs) + tail_mass`` is 1
    to within 1e-12.
    """

    probs: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("probs must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(probs)) or np.any(probs < 0.0):
            raise ValueError("photon-number probabilities must be finite and nonnegative")
        if not (math.isfinite(self.tail_mass) and self.tail_mass >= 0.0):
            raise ValueError("tail_mass must be finite and nonnegative")
        probs = probs.copy()
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)

    @property
    def cutoff(self) -> int:
        """Largest photon number with a stored entry."""
        return self.probs.size - 1


@dataclass(frozen=True)
class MetricsReport:
    """Photon statistics of one distribution: first two moments, Mandel Q
    and the Hellinger non-Gaussianity."""

    mean: float
    variance: float
    mandel_q: float
    hellinger_h: float


def thermal_cutoff(nbar: float, tail_tol: float = DEFAULT_TAIL_TOL) -> int:
    """Smallest cutoff whose geometric tail mass is below ``tail_tol``."""
    if nbar < 0:
        raise ValueError("nbar must be nonnegative")
    q = nbar / (nbar + 1.0)
    if q == 0.0:
        return 0
    cutoff = max(0, math.ceil(math.log(tail_tol) / math.log(q)) - 1)
    while q ** (cutoff + 1) > tail_tol:
        cutoff += 1
    return cutoff


def poisson_cutoff(nbar: float, tail_tol: float = DEFAULT_TAIL_TOL) -> int:
    """Smallest cutoff leaving Poisson mass below ``tail_tol`` above it."""
    if nbar < 0:
        raise ValueError("nbar must be nonnegative")
    p = math.exp(-nbar)
    acc = p
    n = 0
    while 1.0 - acc > tail_tol and n < _POISSON_CUTOFF_CAP:
        p *= nbar / (n + 1)
        acc += p
        n += 1
    return n


def thermal_distribution(nbar: float, cutoff: int | None = None) -> PhotonNumberDistribution:
    """Thermal (geometric) photon-number distribution with mean ``nbar``.

    ``probs[n] = (nbar/(nbar+1))**n / (nbar+1)``.  The mass above the
    cutoff has the closed form ``(nbar/(nbar+1))**(cutoff+1)`` and is
    recorded exactly in ``tail_mass``.  With ``cutoff=None`` the cutoff is
    chosen so the tail stays below 1e-12.
    """
    if nbar < 0:
        raise ValueError("nbar must be nonnegative")
    if cutoff is None:
        cutoff = thermal_cutoff(nbar)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    q = nbar / (nbar + 1.0)
    probs = np.empty(cutoff + 1)
    probs[0] = 1.0 / (nbar + 1.0)
    # cumulative products keep the ratio probs[n+1]/probs[n] exactly q
    for n in range(cutoff):
        probs[n + 1] = probs[n] * q
    return PhotonNumberDistribution(probs, tail_mass=q ** (cutoff + 1))


def phase_diffused_distribution(nbar: float, cutoff: int | None = None) -> PhotonNumberDistribution:
    """Phase-diffused coherent light: Poissonian photon-number distribution.

    Computed by the stable recurrence ``p_0 = exp(-nbar)``,
    ``p_{n+1} = p_n * nbar / (n+1)`` (factorials overflow doubles near
    n = 171).  ``tail_mass`` is ``1 - sum(probs)``, clipped at zero against
    rounding noise.
    """
    if nbar < 0:
        raise ValueError("nbar must be nonnegative")
    if cutoff is None:
        cutoff = poisson_cutoff(nbar)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    probs = np.empty(cutoff + 1)
    probs[0] = math.exp(-nbar)
    for n in range(cutoff):
        probs[n + 1] = probs[n] * nbar / (n + 1)
    tail = max(0.0, 1.0 - float(probs.sum()))
    return PhotonNumberDistribution(probs, tail_mass=tail)


def mean_photon(dist: PhotonNumberDistribution) -> float:
    """Mean photon number over the stored entries (the tail is ignored;
    request a tighter cutoff for high-precision moments)."""
    n = np.arange(dist.probs.size)
    return float(n @ dist.probs)


def photon_variance(dist: PhotonNumberDistribution) -> float:
    """Photon-number variance over the stored entries.

    Tiny negative values from cancellation (|value| < 1e-14) are clipped
    to zero.
    """
    n = np.arange(dist.probs.size)
    mean = float(n @ dist.probs)
    second = float((n * n) @ dist.probs)
    value = second - mean * mean
    if value < 0.0 and abs(value) < 1e-14:
        return 0.0
    return value
