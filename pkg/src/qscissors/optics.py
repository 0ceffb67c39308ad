"""Exact Fock-basis actions of the two-mode squeezer and the beam splitter.

Conventions match the device layout: the nondegenerate amplifier couples
its two modes through exp(xi* a b - xi a'b') with xi = s e^{i phi} (primes
denoting creation operators), and the beam splitter couples the two modes
meeting at it through exp[i theta (b'c + b c')].  A single photon then
transmits with amplitude T = cos(theta) and reflects with R = i sin(theta),
so |T|^2 + |R|^2 = 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "SqueezerParams",
    "BeamSplitterParams",
    "TwoModePureState",
    "two_mode_vacuum",
    "tmsv_amplitude",
    "apply_two_mode_squeezer",
    "apply_beam_splitter",
]

# amplitudes below this are dropped from sparse maps; far below the 1e-12
# tolerances used by every consumer
_AMP_EPS = 1e-16

_NORM_LOSS_TOL = 1e-10


@dataclass(frozen=True)
class SqueezerParams:
    """Amplifier drive: strength ``s`` (>= 0) and classical pump phase ``phi``."""

    s: float
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.s) and self.s >= 0.0):
            raise ValueError("squeezer strength s must be finite and nonnegative")
        if not math.isfinite(self.phi):
            raise ValueError("pump phase must be finite")


@dataclass(frozen=True)
class BeamSplitterParams:
    """Beam splitter parametrized by the mixing angle ``theta`` (radians)."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")

    @property
    def transmittance(self) -> complex:
        return complex(math.cos(self.theta))

    @property
    def reflectance(self) -> complex:
        return 1j * math.sin(self.theta)


@dataclass(frozen=True)
class TwoModePureState:
    """Sparse two-mode pure state: map from (m, n) photon pairs to amplitudes.

    ``cutoff`` is the largest per-mode index that may carry amplitude.  The
    squared norm may fall below 1 when a cutoff truncates the state;
    ``truncation_warning`` is set when more than 1e-10 of the norm was lost.
    """

    amps: dict[tuple[int, int], complex]
    cutoff: int
    truncation_warning: bool = False

    def norm_squared(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.amps.values()))


def two_mode_vacuum(cutoff: int) -> TwoModePureState:
    return TwoModePureState({(0, 0): 1.0 + 0.0j}, cutoff=cutoff)


def tmsv_amplitude(n: int, sq: SqueezerParams) -> complex:
    """Amplitude of the |n, n> pair in the two-mode squeezed vacuum:
    sech(s) * (-e^{i phi} tanh(s))**n."""
    if n < 0:
        raise ValueError("photon number must be nonnegative")
    base = -cmath.exp(1j * sq.phi) * math.tanh(sq.s)
    return (1.0 / math.cosh(sq.s)) * base**n


def apply_two_mode_squeezer(
    state: TwoModePureState, sq: SqueezerParams, cutoff: int
) -> TwoModePureState:
    """Act with the two-mode squeezer on a sparse state, truncated at ``cutoff``.

    Uses the normal-ordered factorization
    exp(-G a'b') * exp(-ln(cosh s) (a'a + b'b + 1)) * exp(G* a b)
    with G = e^{i phi} tanh(s), applied factor by factor.  On the two-mode
    vacuum this reproduces ``tmsv_amplitude`` for every retained pair; the
    norm deficit is then the geometric tail tanh(s)**(2*(cutoff+1)).
    """
    s = sq.s
    if s == 0.0:
        return TwoModePureState(dict(state.amps), cutoff=cutoff)
    gamma = cmath.exp(1j * sq.phi) * math.tanh(s)
    sech = 1.0 / math.cosh(s)

    # lowering series exp(G* a b); terminates at min(m, n)
    lowered: dict[tuple[int, int], complex] = {}
    for (m, n), amp in state.amps.items():
        coef = amp
        j = 0
        while True:
            key = (m - j, n - j)
            lowered[key] = lowered.get(key, 0.0j) + coef
            if m - j == 0 or n - j == 0:
                break
            coef *= gamma.conjugate() * math.sqrt((m - j) * (n - j)) / (j + 1)
            j += 1

    # diagonal factor sech(s)**(m + n + 1), then the raising series
    out: dict[tuple[int, int], complex] = {}
    for (m, n), amp in lowered.items():
        coef = amp * sech ** (m + n + 1)
        j = 0
        while m + j <= cutoff and n + j <= cutoff:
            key = (m + j, n + j)
            out[key] = out.get(key, 0.0j) + coef
            coef *= -gamma * math.sqrt((m + j + 1) * (n + j + 1)) / (j + 1)
            j += 1

    out = {k: a for k, a in out.items() if abs(a) > _AMP_EPS}
    norm_in = state.norm_squared()
    norm_out = float(sum(abs(a) ** 2 for a in out.values()))
    warn = norm_out < norm_in * (1.0 - _NORM_LOSS_TOL)
    return TwoModePureState(out, cutoff=cutoff, truncation_warning=warn)


@lru_cache(maxsize=None)
def _bs_block(theta: float, total: int) -> np.ndarray:
    """Beam-splitter unitary on the fixed-total-photon block.

    Basis index m labels |m, total - m>.  The generator b'c + b c' is real
    symmetric tridiagonal, so the block is exponentiated through its
    eigendecomposition, which keeps it unitary to machine precision.
    """
    if total == 0 or theta == 0.0:
        block = np.eye(total + 1, dtype=complex)
    else:
        k = np.arange(total, dtype=float)
        coupling = np.sqrt((k + 1.0) * (total - k))
        gen = np.diag(coupling, 1) + np.diag(coupling, -1)
        w, v = np.linalg.eigh(gen)
        block = (v * np.exp(1j * theta * w)) @ v.T
    block.setflags(write=False)
    return block


def apply_beam_splitter(state: TwoModePureState, bs: BeamSplitterParams) -> TwoModePureState:
    """Act with the beam splitter on a sparse two-mode state.

    Photon number is conserved within each |m, n> -> {|m', n'| m'+n' = m+n}
    block and the norm is preserved, so no cutoff is needed.
    """
    out: dict[tuple[int, int], complex] = {}
    max_index = 0
    for (m, n), amp in state.amps.items():
        total = m + n
        max_index = max(max_index, total)
        column = _bs_block(bs.theta, total)[:, m]
        for j in range(total + 1):
            key = (j, total - j)
            out[key] = out.get(key, 0.0j) + amp * column[j]
    out = {k: a for k, a in out.items() if abs(a) > _AMP_EPS}
    return TwoModePureState(out, cutoff=max_index, truncation_warning=state.truncation_warning)
