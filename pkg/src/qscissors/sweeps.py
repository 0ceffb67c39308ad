"""Parameter sweeps over the device settings, and the canned figure sweeps.

A sweep varies one of (s, theta, nbar, N) over a uniform grid while holding
the rest of the configuration fixed, and evaluates the requested metrics of
the heralded state at every grid point.  Grid points where the heralding
probability vanishes are reported with the sentinel value ``None`` (written
as ``NA`` in CSV) instead of being skipped silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO

import numpy as np

from .fock import (
    PhotonNumberDistribution,
    mean_photon,
    phase_diffused_distribution,
    poisson_cutoff,
    thermal_cutoff,
    thermal_distribution,
)
from .metrics import hellinger_nongaussianity, mandel_q
from .optics import BeamSplitterParams, SqueezerParams
from .scissors import (
    Placement,
    ScissorsConfig,
    UndefinedStateError,
    truncated_state_a,
    truncated_state_b,
)

__all__ = [
    "SweepSpec",
    "SWEEP_VARIABLES",
    "SWEEP_METRICS",
    "INPUT_KINDS",
    "MAX_DETECTED",
    "FIGURES",
    "run_sweep",
    "write_csv",
]

SWEEP_VARIABLES = ("s", "theta", "nbar", "N")
SWEEP_METRICS = ("probability", "mandel_q", "hellinger_h", "mean")
INPUT_KINDS = ("thermal", "pd")

#: Heralded counts decay steeply with N; larger values have no useful grid.
MAX_DETECTED = 20

_QUARTER_PI = math.pi / 4.0


@dataclass(frozen=True)
class SweepSpec:
    """One-variable sweep description.

    ``detected`` lists the heralded photon counts evaluated side by side
    (ignored when N itself is the swept variable).  ``include_input_h``
    appends a column with the Hellinger non-Gaussianity of the raw input
    state.
    """

    variable: str
    start: float
    stop: float
    steps: int
    input_kind: str
    nbar: float
    s: float
    theta: float
    detected: tuple[int, ...]
    placement: Placement = Placement.BOUT_COUT
    metrics: tuple[str, ...] = ("probability",)
    include_input_h: bool = False

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"unknown sweep variable {self.variable!r}")
        if self.input_kind not in INPUT_KINDS:
            raise ValueError(f"unknown input kind {self.input_kind!r}")
        if self.steps < 2:
            raise ValueError("a sweep needs at least 2 grid points")
        if not self.start < self.stop:
            raise ValueError("sweep range must satisfy start < stop")
        if self.variable in ("s", "nbar") and self.start < 0:
            raise ValueError(f"{self.variable} cannot be negative")
        if self.nbar < 0 or self.s < 0:
            raise ValueError("fixed s and nbar must be nonnegative")
        unknown = set(self.metrics) - set(SWEEP_METRICS)
        if unknown:
            raise ValueError(f"unknown metrics: {sorted(unknown)}")
        if not self.metrics:
            raise ValueError("at least one metric is required")
        if self.variable != "N":
            if not self.detected:
                raise ValueError("at least one detected count is required")
            bad = [n for n in self.detected if not 0 <= n <= MAX_DETECTED]
            if bad:
                raise ValueError(f"detected counts must lie in [0, {MAX_DETECTED}]: {bad}")

    def grid(self) -> np.ndarray:
        values = np.linspace(self.start, self.stop, self.steps)
        if self.variable == "N":
            rounded = np.rint(values)
            if not np.allclose(values, rounded, atol=1e-9):
                raise ValueError("an N sweep must hit whole numbers only")
            if rounded[0] < 0 or rounded[-1] > MAX_DETECTED:
                raise ValueError(f"N sweep must stay within [0, {MAX_DETECTED}]")
            return rounded
        return values


def _input_state(kind: str, nbar: float, min_cutoff: int = 0) -> PhotonNumberDistribution:
    # the stored range must cover the detected count even when the adaptive
    # tail criterion alone would stop earlier (weak inputs, large N)
    if kind == "thermal":
        return thermal_distribution(nbar, cutoff=max(thermal_cutoff(nbar), min_cutoff))
    return phase_diffused_distribution(nbar, cutoff=max(poisson_cutoff(nbar), min_cutoff))


def _point(dist, cfg: ScissorsConfig, metrics: tuple[str, ...]) -> dict[str, float | None]:
    try:
        if cfg.placement is Placement.BOUT_COUT:
            state = truncated_state_a(dist, cfg)
        else:
            state = truncated_state_b(dist, cfg)
    except UndefinedStateError:
        values: dict[str, float | None] = {name: None for name in metrics}
        if "probability" in metrics:
            values["probability"] = 0.0
        return values
    values = {}
    for name in metrics:
        if name == "probability":
            values[name] = state.probability
        elif name == "mandel_q":
            values[name] = mandel_q(state.dist)
        elif name == "hellinger_h":
            values[name] = hellinger_nongaussianity(state.dist)
        else:
            values[name] = mean_photon(state.dist)
    return values


def run_sweep(spec: SweepSpec) -> tuple[list[str], list[list[float | None]]]:
    """Evaluate the sweep; returns a header and one row per grid point.

    Rows are ordered by grid index and contain plain floats, with ``None``
    marking metrics of an undefined (zero-probability) heralded state.
    """
    grid = spec.grid()
    per_n = spec.variable != "N"
    counts = spec.detected if per_n else (0,)
    largest_count = max(counts) if per_n else int(grid[-1])

    header = [spec.variable]
    for metric in spec.metrics:
        for n in counts:
            header.append(f"{metric}_N{n}" if per_n else metric)
    if spec.include_input_h:
        header.append("hellinger_h_input")

    base_input = None
    if spec.variable != "nbar":
        base_input = _input_state(spec.input_kind, spec.nbar, largest_count)

    rows: list[list[float | None]] = []
    for x in grid:
        s = float(x) if spec.variable == "s" else spec.s
        theta = float(x) if spec.variable == "theta" else spec.theta
        if base_input is not None:
            dist = base_input
        else:
            dist = _input_state(spec.input_kind, float(x), largest_count)
        row_counts = counts if per_n else (int(x),)

        cells: dict[tuple[str, int], float | None] = {}
        for n in row_counts:
            cfg = ScissorsConfig(
                sq=SqueezerParams(s=s),
                bs=BeamSplitterParams(theta=theta),
                detected_n=n,
                placement=spec.placement,
            )
            for name, value in _point(dist, cfg, spec.metrics).items():
                cells[(name, n)] = value

        row: list[float | None] = [float(x)]
        for metric in spec.metrics:
            for n in row_counts:
                row.append(cells[(metric, n)])
        if spec.include_input_h:
            row.append(hellinger_nongaussianity(dist))
        rows.append(row)
    return header, rows


def write_csv(header: list[str], rows: list[list[float | None]], stream: IO[str]) -> None:
    """Write sweep results as CSV: 12 significant digits, NA sentinels, LF endings."""
    stream.write(",".join(header) + "\n")
    for row in rows:
        rendered = [_format(value) for value in row]
        stream.write(",".join(rendered) + "\n")


def _format(value: float | None) -> str:
    return "NA" if value is None else format(value, ".12g")


def _s_sweep(kind: str, metrics: tuple[str, ...], counts: tuple[int, ...], **kw) -> SweepSpec:
    return SweepSpec(
        variable="s",
        start=0.0,
        stop=2.0,
        steps=101,
        input_kind=kind,
        nbar=1.0,
        s=0.5,
        theta=_QUARTER_PI,
        detected=counts,
        metrics=metrics,
        **kw,
    )


def _nbar_sweep(kind: str, metrics: tuple[str, ...], counts: tuple[int, ...], **kw) -> SweepSpec:
    return SweepSpec(
        variable="nbar",
        start=0.05,
        stop=5.0,
        steps=100,
        input_kind=kind,
        nbar=1.0,
        s=0.5,
        theta=_QUARTER_PI,
        detected=counts,
        metrics=metrics,
        **kw,
    )


# Canned sweeps behind the figure command: heralded states from the
# amplifier port, 50:50 splitter (theta = pi/4), nbar = 1 when s is swept
# and s = 0.5 when nbar is swept.
FIGURES: dict[str, SweepSpec] = {
    "fig2": _s_sweep("thermal", ("probability",), (1, 2, 3)),
    "fig3": _s_sweep("thermal", ("mandel_q",), (1,)),
    "fig4": _nbar_sweep("thermal", ("mandel_q",), (1,)),
    "fig5": _s_sweep("thermal", ("hellinger_h",), (1, 2, 3)),
    "fig6": _nbar_sweep("thermal", ("hellinger_h",), (1, 2, 3)),
    "fig7": _s_sweep("pd", ("probability",), (1, 2, 3)),
    "fig8": _s_sweep("pd", ("mandel_q",), (1, 2, 3)),
    "fig9": _nbar_sweep("pd", ("mandel_q",), (1,)),
    "fig10": _s_sweep("pd", ("hellinger_h",), (1, 2, 3), include_input_h=True),
    "fig11": _nbar_sweep("pd", ("hellinger_h",), (1, 2, 3), include_input_h=True),
}
