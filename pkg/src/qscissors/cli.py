"""Command-line interface: single-point reports, sweeps, canned figures, selftest.

Angles are radians everywhere (pi/4 = 0.7853981634).  All numeric output
uses 12 significant digits.  Exit codes: 0 success, 2 usage error, 3
numerical domain error.  A JSON config file may supply any flag value;
flags given on the command line win.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .fock import (
    phase_diffused_distribution,
    poisson_cutoff,
    thermal_cutoff,
    thermal_distribution,
)
from .metrics import metrics_report
from .optics import BeamSplitterParams, SqueezerParams
from .oracle import DEFAULT_CUTOFF, DetectionOutcome, postselect
from .scissors import (
    Placement,
    ScissorsConfig,
    UndefinedStateError,
    probability_a,
    probability_b,
    truncated_state_a,
    truncated_state_b,
)
from .sweeps import (
    FIGURES,
    MAX_DETECTED,
    SWEEP_METRICS,
    SWEEP_VARIABLES,
    SweepSpec,
    run_sweep,
    write_csv,
)

_PLACEMENTS = {"a": Placement.BOUT_COUT, "b": Placement.AOUT_COUT}

_STATE_DEFAULTS = {
    "input": "thermal",
    "nbar": 1.0,
    "s": 0.5,
    "theta": math.pi / 4.0,
    "N": 1,
    "placement": "a",
    "oracle": False,
    "cutoff": DEFAULT_CUTOFF,
}

_SWEEP_DEFAULTS = {
    "variable": "s",
    "start": 0.0,
    "stop": 2.0,
    "steps": 101,
    "input": "thermal",
    "nbar": 1.0,
    "s": 0.5,
    "theta": math.pi / 4.0,
    "N": [1],
    "placement": "a",
    "metrics": ["probability"],
    "output": None,
}

_FIGURE_DEFAULTS = {"outdir": ".", "plot": False}

_SELFTEST_DEFAULTS = {"cutoff": DEFAULT_CUTOFF, "tolerance": 1e-9}


class UsageError(Exception):
    pass


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _fmt_array(values) -> str:
    return "[" + ", ".join(_fmt(float(v)) for v in values) + "]"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qscissors",
        description="Heralded truncation of Fock-diagonal light states: "
        "closed-form device maps, nonclassicality metrics and a brute-force cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None,
                        help="JSON file with default flag values; explicit flags override")

    p_state = sub.add_parser("state", parents=[common],
                             help="evaluate one device setting and print the heralded state")
    p_state.add_argument("--input", choices=["thermal", "pd"], help="input state family")
    p_state.add_argument("--nbar", type=float, help="input mean photon number")
    p_state.add_argument("--s", type=float, help="amplifier strength, s >= 0")
    p_state.add_argument("--theta", type=float,
                         help="beam splitter angle in radians (pi/4 = 0.7853981634)")
    p_state.add_argument("--N", type=int, help=f"detected photon count, 0..{MAX_DETECTED}")
    p_state.add_argument("--placement", choices=["a", "b"],
                         help="output port of the heralded state: "
                         "a = amplifier port (max-Fock), b = splitter port (min-Fock)")
    p_state.add_argument("--oracle", action="store_true", default=None,
                         help="also run the brute-force simulation and print the deviation")
    p_state.add_argument("--cutoff", type=int, help="per-mode Fock cutoff for the oracle")

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="sweep one variable and emit CSV")
    p_sweep.add_argument("--variable", choices=list(SWEEP_VARIABLES), help="swept variable")
    p_sweep.add_argument("--start", type=float, help="grid start (inclusive)")
    p_sweep.add_argument("--stop", type=float, help="grid stop (inclusive)")
    p_sweep.add_argument("--steps", type=int, help="number of grid points, >= 2")
    p_sweep.add_argument("--input", choices=["thermal", "pd"], help="input state family")
    p_sweep.add_argument("--nbar", type=float, help="fixed input mean photon number")
    p_sweep.add_argument("--s", type=float, help="fixed amplifier strength")
    p_sweep.add_argument("--theta", type=float,
                         help="fixed splitter angle in radians (pi/4 = 0.7853981634)")
    p_sweep.add_argument("--N", type=int, nargs="+",
                         help="detected counts evaluated side by side (ignored when sweeping N)")
    p_sweep.add_argument("--placement", choices=["a", "b"])
    p_sweep.add_argument("--metrics", nargs="+", choices=list(SWEEP_METRICS))
    p_sweep.add_argument("--output", type=Path, help="CSV path (default: stdout)")

    p_fig = sub.add_parser("figure", parents=[common],
                           help="emit the CSV for one canned figure sweep")
    p_fig.add_argument("figure_id", choices=sorted(FIGURES, key=lambda k: int(k[3:])))
    p_fig.add_argument("--outdir", type=Path,
                       help="directory receiving <figure_id>.csv (default: current)")
    p_fig.add_argument("--plot", action="store_true", default=None,
                       help="also render <figure_id>.png (requires matplotlib)")

    p_self = sub.add_parser("selftest", parents=[common],
                            help="compare the closed forms against the brute-force "
                            "simulation over a parameter grid")
    p_self.add_argument("--cutoff", type=int, help="per-mode Fock cutoff")
    p_self.add_argument("--tolerance", type=float, help="max allowed deviation")

    return parser


def _merge(args: argparse.Namespace, defaults: dict) -> dict:
    """Resolve each flag: command line, then config file, then hard default."""
    config = {}
    if getattr(args, "config", None) is not None:
        try:
            config = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        if not isinstance(config, dict):
            raise UsageError("config file must hold a JSON object of flag values")
        unknown = set(config) - set(defaults)
        if unknown:
            raise UsageError(f"config keys not valid for this command: {sorted(unknown)}")
    merged = {}
    for key, hard in defaults.items():
        cli_value = getattr(args, key, None)
        merged[key] = cli_value if cli_value is not None else config.get(key, hard)
    return merged


def _check_point(nbar: float, s: float, n_detected) -> None:
    if nbar < 0:
        raise UsageError("--nbar must be nonnegative")
    if s < 0:
        raise UsageError("--s must be nonnegative")
    for n in np.atleast_1d(n_detected):
        if not 0 <= int(n) <= MAX_DETECTED:
            raise UsageError(f"--N must lie in [0, {MAX_DETECTED}]")


def _build_input(kind: str, nbar: float, min_cutoff: int = 0):
    if kind == "thermal":
        return thermal_distribution(nbar, cutoff=max(thermal_cutoff(nbar), min_cutoff))
    return phase_diffused_distribution(nbar, cutoff=max(poisson_cutoff(nbar), min_cutoff))


def cmd_state(args: argparse.Namespace) -> int:
    opts = _merge(args, _STATE_DEFAULTS)
    _check_point(opts["nbar"], opts["s"], opts["N"])
    placement = _PLACEMENTS[opts["placement"]]
    dist = _build_input(opts["input"], opts["nbar"], opts["N"])
    cfg = ScissorsConfig(
        sq=SqueezerParams(s=opts["s"]),
        bs=BeamSplitterParams(theta=opts["theta"]),
        detected_n=opts["N"],
        placement=placement,
    )

    if placement is Placement.BOUT_COUT:
        prob = probability_a(dist, cfg)
        state = truncated_state_a(dist, cfg)
    else:
        prob = probability_b(dist, cfg)
        state = truncated_state_b(dist, cfg)
    report = metrics_report(state.dist)

    print(f"input: {opts['input']} nbar={_fmt(opts['nbar'])}")
    print(f"device: s={_fmt(opts['s'])} theta={_fmt(opts['theta'])} "
          f"N={opts['N']} placement={opts['placement']}")
    print(f"probability: {_fmt(prob)}")
    print(f"probs: {_fmt_array(state.dist.probs)}")
    print(f"mean: {_fmt(report.mean)}")
    print(f"mandel_q: {_fmt(report.mandel_q)}")
    print(f"hellinger_h: {_fmt(report.hellinger_h)}")

    if opts["oracle"]:
        # both routes must see the same stored input, so the comparison is
        # run on the input rebuilt at the evolution cutoff
        cutoff = opts["cutoff"]
        if opts["input"] == "thermal":
            compare_input = thermal_distribution(opts["nbar"], cutoff=cutoff)
        else:
            compare_input = phase_diffused_distribution(opts["nbar"], cutoff=cutoff)
        if placement is Placement.BOUT_COUT:
            reference = truncated_state_a(compare_input, cfg)
        else:
            reference = truncated_state_b(compare_input, cfg)
        outcome = DetectionOutcome(placement=placement, detected_n=opts["N"])
        oracle_dist, oracle_prob = postselect(compare_input, cfg.sq, cfg.bs, outcome, cutoff)
        size = max(reference.dist.probs.size, oracle_dist.probs.size)
        closed = np.pad(reference.dist.probs, (0, size - reference.dist.probs.size))
        brute = np.pad(oracle_dist.probs, (0, size - oracle_dist.probs.size))
        deviation = max(
            float(np.max(np.abs(closed - brute))),
            abs(reference.probability - oracle_prob),
        )
        print(f"oracle probability: {_fmt(oracle_prob)}")
        print(f"oracle probs: {_fmt_array(oracle_dist.probs)}")
        print(f"max deviation: {_fmt(deviation)}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    opts = _merge(args, _SWEEP_DEFAULTS)
    counts = opts["N"] if isinstance(opts["N"], (list, tuple)) else [opts["N"]]
    _check_point(opts["nbar"], opts["s"], counts)
    try:
        spec = SweepSpec(
            variable=opts["variable"],
            start=opts["start"],
            stop=opts["stop"],
            steps=opts["steps"],
            input_kind=opts["input"],
            nbar=opts["nbar"],
            s=opts["s"],
            theta=opts["theta"],
            detected=tuple(int(n) for n in counts),
            placement=_PLACEMENTS[opts["placement"]],
            metrics=tuple(opts["metrics"]),
        )
        spec.grid()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    header, rows = run_sweep(spec)
    if opts["output"] is None:
        write_csv(header, rows, sys.stdout)
    else:
        with open(opts["output"], "w", newline="") as fh:
            write_csv(header, rows, fh)
    return 0


def cmd_figure(args: argparse.Namespace) -> int:
    opts = _merge(args, _FIGURE_DEFAULTS)
    outdir = Path(opts["outdir"])
    spec = FIGURES[args.figure_id]
    header, rows = run_sweep(spec)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / f"{args.figure_id}.csv"
    with open(csv_path, "w", newline="") as fh:
        write_csv(header, rows, fh)
    print(f"wrote {csv_path}")
    if opts["plot"]:
        _render_plot(args.figure_id, header, rows, outdir)
    return 0


def _render_plot(figure_id: str, header, rows, outdir: Path) -> None:
    try:
        import matplotlib
    except ImportError as exc:
        raise UsageError("--plot needs matplotlib (pip install qscissors[plot])") from exc

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [row[0] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    for col in range(1, len(header)):
        ys = [row[col] if row[col] is not None else float("nan") for row in rows]
        ax.plot(xs, ys, label=header[col])
    ax.set_xlabel(header[0])
    ax.legend()
    ax.grid(True, alpha=0.3)
    png_path = outdir / f"{figure_id}.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    print(f"wrote {png_path}")


def cmd_selftest(args: argparse.Namespace) -> int:
    opts = _merge(args, _SELFTEST_DEFAULTS)
    cutoff, tol = opts["cutoff"], opts["tolerance"]
    nbars = (0.5, 1.0, 2.0)
    strengths = (0.3, 0.5, 1.0)
    thetas = (math.pi / 6.0, math.pi / 4.0, math.pi / 3.0)
    counts = (0, 1, 2, 3)

    worst = 0.0
    failures = 0
    for s in strengths:
        for theta in thetas:
            sq = SqueezerParams(s=s)
            bs = BeamSplitterParams(theta=theta)
            for nbar in nbars:
                dist = thermal_distribution(nbar, cutoff=cutoff)
                for n_det in counts:
                    for letter, placement in _PLACEMENTS.items():
                        cfg = ScissorsConfig(sq=sq, bs=bs, detected_n=n_det, placement=placement)
                        if placement is Placement.BOUT_COUT:
                            state = truncated_state_a(dist, cfg)
                        else:
                            state = truncated_state_b(dist, cfg)
                        outcome = DetectionOutcome(placement=placement, detected_n=n_det)
                        brute_dist, brute_prob = postselect(dist, sq, bs, outcome, cutoff)
                        size = max(state.dist.probs.size, brute_dist.probs.size)
                        closed = np.pad(state.dist.probs, (0, size - state.dist.probs.size))
                        brute = np.pad(brute_dist.probs, (0, size - brute_dist.probs.size))
                        dev = max(
                            float(np.max(np.abs(closed - brute))),
                            abs(state.probability - brute_prob),
                        )
                        worst = max(worst, dev)
                        status = "ok" if dev < tol else "FAIL"
                        if dev >= tol:
                            failures += 1
                        print(
                            f"{status} nbar={_fmt(nbar)} s={_fmt(s)} theta={_fmt(theta)} "
                            f"N={n_det} placement={letter} deviation={dev:.3e}"
                        )
    print(f"worst deviation: {worst:.3e} (tolerance {tol:.1e})")
    if failures:
        print(f"{failures} combinations out of tolerance")
        return 1
    print("all combinations within tolerance")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "state": cmd_state,
        "sweep": cmd_sweep,
        "figure": cmd_figure,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UndefinedStateError, ValueError) as exc:
        print(f"numerical domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
