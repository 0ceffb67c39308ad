"""Nonclassicality quantifiers for Fock-diagonal states.

Mandel Q flags sub-Poissonian photon statistics (Q < 0, with Q = -1 for
Fock states and Q = 0 for Poissonian light).  The Hellinger
non-Gaussianity H measures the distance to the Gaussian reference state
with the same first and second moments; for a zero-mean Fock-diagonal
state that reference is the thermal state with the same mean photon
number, which leaves a sum over square roots of the two distributions.
"""

from __future__ import annotations

import math

import numpy as np

from .fock import MetricsReport, PhotonNumberDistribution, mean_photon, photon_variance
from .optics import BeamSplitterParams, SqueezerParams

__all__ = [
    "mandel_q",
    "mandel_q_thermal_closed_form",
    "hellinger_nongaussianity",
    "metrics_report",
]


def mandel_q(dist: PhotonNumberDistribution) -> float:
    """Mandel Q = variance/mean - 1, with Q(vacuum) defined as 0 (the
    vacuum is the zero-amplitude limit of coherent light)."""
    mean = mean_photon(dist)
    if mean == 0.0:
        return 0.0
    return photon_variance(dist) / mean - 1.0


def mandel_q_thermal_closed_form(
    nbar_th: float, sq: SqueezerParams, bs: BeamSplitterParams
) -> float:
    """Mandel Q of the max-Fock state heralded from thermal input.

    Q = -tanh(s)^2 |T|^2 / ((nbar/(1+nbar)) |R|^2 + tanh(s)^2 |T|^2),
    independent of the detected photon number N.  Always in [-1, 0].
    """
    if nbar_th < 0:
        raise ValueError("nbar_th must be nonnegative")
    tanh2_trans2 = math.tanh(sq.s) ** 2 * abs(bs.transmittance) ** 2
    denom = (nbar_th / (1.0 + nbar_th)) * abs(bs.reflectance) ** 2 + tanh2_trans2
    if denom == 0.0:
        raise ValueError("Q is undefined when both the amplifier and input terms vanish")
    return -tanh2_trans2 / denom


def hellinger_nongaussianity(dist: PhotonNumberDistribution) -> float:
    """Hellinger non-Gaussianity H = sqrt(1 - sum_n sqrt(p_n r_n)) where
    r_n is the thermal distribution with the state's own mean photon number.

    The sum runs over the stored entries; it is exact for states whose
    support ends at the cutoff.  The result is clipped to [0, 1] against
    rounding (thermal input can push the affinity a few ulp past 1).
    """
    nbar = mean_photon(dist)
    ratio = nbar / (nbar + 1.0)
    # geometric recurrence avoids overflow of nbar**n at large cutoffs
    reference = np.empty(dist.probs.size)
    reference[0] = 1.0 / (nbar + 1.0)
    for n in range(dist.probs.size - 1):
        reference[n + 1] = reference[n] * ratio
    affinity = float(np.sum(np.sqrt(dist.probs * reference)))
    return math.sqrt(min(1.0, max(0.0, 1.0 - affinity)))


def metrics_report(dist: PhotonNumberDistribution) -> MetricsReport:
    """Bundle mean, variance, Mandel Q and Hellinger H for one distribution."""
    return MetricsReport(
        mean=mean_photon(dist),
        variance=photon_variance(dist),
        mandel_q=mandel_q(dist),
        hellinger_h=hellinger_nongaussianity(dist),
    )
