"""Command-line driver: one subcommand per experiment.

Every command writes its figure CSVs plus a JSON manifest capturing the
full configuration and the trained per-frame parameters; ``nlpc replay``
re-runs a manifest and reproduces the CSVs byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import numpy as np

from . import __version__
from .audio import FrameConfig
from .data import sample_path
from .errors import ArgumentError, NlpcError
from .lattice import W_TRAJECTORY_CLIP, dispersion_report, mlp_to_lattice
from .lpc import analyze_frame, lpc_residual, prediction_gain, synthesis_filter
from .mlp import (
    BACKPROP,
    LEVENBERG_MARQUARDT,
    TrainConfig,
    draw_init,
    mlp_predict_frame,
    train_bp,
    train_lm,
    train_multi_init,
)
from .pipeline import (
    analyze_corpus,
    designate_voiced_frame,
    lattice_pairs,
    load_and_frame,
    voiced_segment,
)
from .quant import (
    analysis_gain_sweep,
    nn_synthesize,
    reconstruction_gain,
    residual_quant_experiment,
    synthesis_gain_sweep,
)
from .report import (
    FrameGainRecord,
    gain_scatter,
    gain_table,
    init_sensitivity_table,
    residual_histogram,
    training_curves,
    write_csv,
)
from . import svgplot

DEFAULT_SEED = 12345
DEFAULT_BITS_LIST = list(range(1, 17)) + [20, 24]
MANIFEST_PREFIX = "manifest_"


@dataclass
class RunConfig:
    """Everything a command needs; serialized verbatim into the manifest."""

    command: str
    input: str
    out_dir: str
    seed: int = DEFAULT_SEED
    speaker: str = "unknown"
    sex: str = "unknown"
    frame_len: int = 200
    hidden: int = 2
    epochs: int = 50
    inits: int = 5
    order: int = 12
    bits_list: list[int] = field(default_factory=lambda: list(DEFAULT_BITS_LIST))
    mode: str = "analysis"
    bits: int = 9
    frame_index: int | None = None
    segment_len: int = 4000
    emit_svg: bool = False

    def validate(self) -> None:
        if not Path(self.input).is_file():
            raise ArgumentError(f"input file not found: {self.input}")
        if any(b2 <= b1 for b1, b2 in zip(self.bits_list, self.bits_list[1:])):
            raise ArgumentError(f"bits list must be strictly increasing: {self.bits_list}")
        if self.hidden not in (2, 4):
            raise ArgumentError(f"hidden layer size must be 2 or 4, got {self.hidden}")
        if self.mode not in ("analysis", "synthesis"):
            raise ArgumentError(f"mode must be analysis or synthesis, got {self.mode}")

    def frame_config(self) -> FrameConfig:
        return FrameConfig(frame_len=self.frame_len, history_len=max(12, self.order))

    def train_config(self, hidden: int | None = None, algorithm: str = LEVENBERG_MARQUARDT) -> TrainConfig:
        return TrainConfig(
            epochs=self.epochs,
            n_inits=self.inits,
            algorithm=algorithm,
            rng_seed=self.seed,
            n_hidden=self.hidden if hidden is None else hidden,
        )

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in data.items() if k in known})


def _frame_record(result) -> dict:
    """Per-frame parameter snapshot for the manifest (FIR and lattice forms)."""
    entry = {"frame": result.frame.index, "label": result.frame.label}
    if result.lpc_model is not None:
        entry["lpc_a"] = result.lpc_model.a.tolist()
        entry["lpc_k"] = result.lpc_model.k.tolist()
        entry["lpc_err"] = result.lpc_model.err
    if result.net is not None:
        entry["mlp"] = result.net.to_vector().tolist()
        lat = mlp_to_lattice(result.net)
        entry["lattice"] = lat.to_vector().tolist() if lat.fully_converted else None
    if result.skipped:
        entry["skipped"] = result.skipped
    return entry


def _write_manifest(cfg: RunConfig, timings: dict, frames: list[dict]) -> Path:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {
        "tool": "nlpc",
        "version": __version__,
        "command": cfg.command,
        "created_unix": time.time(),
        "seed": cfg.seed,
        "config": asdict(cfg),
        "timings_s": timings,
        "frames": frames,
    }
    path = out / f"{MANIFEST_PREFIX}{cfg.command.replace('-', '_')}.json"
    path.write_text(json.dumps(manifest, indent=1))
    return path


def _resolve_frame(cfg: RunConfig, frames):
    if cfg.frame_index is None:
        return frames[designate_voiced_frame(frames)]
    if not 0 <= cfg.frame_index < len(frames):
        raise ArgumentError(f"frame index {cfg.frame_index} out of range 0..{len(frames) - 1}")
    return frames[cfg.frame_index]


def _out(cfg: RunConfig, name: str) -> Path:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out / name


def cmd_gains(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    signal, frames = load_and_frame(cfg.input, cfg.frame_config())
    results = analyze_corpus(frames, cfg.train_config(), lpc_order=cfg.order)
    t1 = time.perf_counter()

    usable = [r for r in results if r.usable]
    gains_path = _out(cfg, "fig1_gains.csv")
    write_csv(
        gains_path,
        ["frame", "label", "gp_lpc_db", "gp_nlpc_db"],
        [[r.frame.index, r.frame.label, r.gp_lpc_db, r.gp_nlpc_db] for r in usable],
    )
    records = [
        FrameGainRecord(
            frame_index=r.frame.index,
            label=r.frame.label,
            gp_lpc_db=r.gp_lpc_db,
            gp_nlpc_db=r.gp_nlpc_db,
            speaker=cfg.speaker,
            sex=cfg.sex,
        )
        for r in usable
    ]
    table = gain_table(records)
    table_path = _out(cfg, "gain_table.csv")
    write_csv(
        table_path,
        ["group", "count", "mean_gp_lpc_db", "std_gp_lpc_db", "mean_gp_nlpc_db", "std_gp_nlpc_db"],
        [
            [row.group, row.count, row.mean_gp_lpc_db, row.std_gp_lpc_db, row.mean_gp_nlpc_db, row.std_gp_nlpc_db]
            for row in table.rows
        ],
    )
    written = [gains_path, table_path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig1_gains.svg")
        svgplot.write_line_svg(
            svg,
            [r.frame.index for r in usable],
            {
                "lpc": [r.gp_lpc_db for r in usable],
                "nlpc": [r.gp_nlpc_db for r in usable],
            },
            title="Per-frame prediction gain",
            xlabel="frame",
            ylabel="Gp [dB]",
        )
        written.append(svg)
    _write_manifest(cfg, {"train_s": t1 - t0}, [_frame_record(r) for r in results])
    return written


def cmd_train_curve(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    _, frames = load_and_frame(cfg.input, cfg.frame_config())
    frame = _resolve_frame(cfg, frames)
    lm_cfg = cfg.train_config()
    init = draw_init(lm_cfg, frame.index, 0)
    net_lm, trace_lm = train_lm(frame, lm_cfg, init)
    bp_cfg = cfg.train_config(algorithm=BACKPROP)
    _, trace_bp = train_bp(frame, bp_cfg, init)
    t1 = time.perf_counter()

    header, rows = training_curves({"lm": trace_lm, "bp": trace_bp})
    path = _out(cfg, "fig2_train_curve.csv")
    write_csv(path, header, rows)
    written = [path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig2_train_curve.svg")
        series = {
            name: [row[i + 1] for row in rows] for i, name in enumerate(h[4:] for h in header[1:])
        }
        svgplot.write_line_svg(
            svg,
            [row[0] for row in rows],
            series,
            title=f"SSE vs epochs (frame {frame.index})",
            xlabel="epoch",
            ylabel="SSE",
        )
        written.append(svg)
    record = {"frame": frame.index, "label": frame.label, "mlp": net_lm.to_vector().tolist()}
    _write_manifest(cfg, {"train_s": t1 - t0}, [record])
    return written


def cmd_init_sensitivity(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    _, frames = load_and_frame(cfg.input, cfg.frame_config())
    voiced = [f for f in frames if f.label == "voiced"]
    if not voiced:
        raise ArgumentError("no voiced frames in input")
    frame_rows = []
    manifest_frames = []
    for frame in voiced:
        model = analyze_frame(frame, order=cfg.order)
        gp_lpc = prediction_gain(frame.body, lpc_residual(model, frame)).gp_db
        by_hidden = {}
        for hidden in (2, 4):
            _, traces = train_multi_init(frame, cfg.train_config(hidden=hidden))
            gains = {t.init_index: t.final_gp_db for t in traces}
            by_hidden[hidden] = [gains.get(i, float("nan")) for i in range(cfg.inits)]
        frame_rows.append(
            {"frame_index": frame.index, "gp_lpc_db": gp_lpc, "gp_by_hidden": by_hidden}
        )
        manifest_frames.append({"frame": frame.index, "label": frame.label})
    t1 = time.perf_counter()

    header, rows = init_sensitivity_table(frame_rows)
    path = _out(cfg, "fig3_init_sensitivity.csv")
    write_csv(path, header, rows)
    written = [path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig3_init_sensitivity.svg")
        best_h2 = [max(r["gp_by_hidden"][2]) for r in frame_rows]
        best_h4 = [max(r["gp_by_hidden"][4]) for r in frame_rows]
        svgplot.write_line_svg(
            svg,
            [r["frame_index"] for r in frame_rows],
            {
                "best_h2": best_h2,
                "best_h4": best_h4,
                "lpc": [r["gp_lpc_db"] for r in frame_rows],
            },
            title="Best-of-inits gain per frame",
            xlabel="frame",
            ylabel="Gp [dB]",
        )
        written.append(svg)
    _write_manifest(cfg, {"train_s": t1 - t0}, manifest_frames)
    return written


def cmd_scatter(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    _, frames = load_and_frame(cfg.input, cfg.frame_config())
    results = analyze_corpus(frames, cfg.train_config(), lpc_order=cfg.order)
    t1 = time.perf_counter()
    usable = [r for r in results if r.usable]
    if len(usable) < 2:
        raise ArgumentError("need at least two analyzable frames for a scatter")
    pairs = np.array([[r.gp_lpc_db, r.gp_nlpc_db] for r in usable])
    scatter = gain_scatter(pairs)

    scatter_path = _out(cfg, "fig4_scatter.csv")
    write_csv(
        scatter_path,
        ["frame", "label", "gp_lpc_db", "gp_nlpc_db"],
        [[r.frame.index, r.frame.label, r.gp_lpc_db, r.gp_nlpc_db] for r in usable],
    )
    fit_path = _out(cfg, "fig4_fit.csv")
    write_csv(
        fit_path,
        ["slope", "intercept", "fraction_above_diagonal", "n_points", "degenerate"],
        [[scatter.slope, scatter.intercept, scatter.fraction_above_diagonal, len(usable), scatter.degenerate]],
    )
    written = [scatter_path, fit_path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig4_scatter.svg")
        svgplot.write_scatter_svg(
            svg,
            pairs[:, 0],
            pairs[:, 1],
            title="Linear vs nonlinear prediction gain",
            xlabel="Gp LPC [dB]",
            ylabel="Gp NLPC [dB]",
            diagonal=True,
            fit=None if scatter.degenerate else (scatter.slope, scatter.intercept),
        )
        written.append(svg)
    _write_manifest(cfg, {"train_s": t1 - t0}, [_frame_record(r) for r in results])
    return written


def cmd_residual_hist(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    _, frames = load_and_frame(cfg.input, cfg.frame_config())
    frame = _resolve_frame(cfg, frames)
    model = analyze_frame(frame, order=cfg.order)
    e_lpc = lpc_residual(model, frame)
    net, _ = train_multi_init(frame, cfg.train_config())
    _, e_nn = mlp_predict_frame(net, frame)
    t1 = time.perf_counter()

    hist_rows = []
    counter_rows = []
    for name, residual in (("lpc", e_lpc), ("nlpc", e_nn)):
        hist = residual_histogram(residual)
        for left, right, count in zip(hist.bin_edges[:-1], hist.bin_edges[1:], hist.counts):
            hist_rows.append([name, left, right, count])
        counter_rows.append([name, hist.cp, hist.cn, hist.asymmetry, hist.degenerate])
    hist_path = _out(cfg, "fig5_residual_hist.csv")
    write_csv(hist_path, ["predictor", "bin_left", "bin_right", "count"], hist_rows)
    counters_path = _out(cfg, "fig5_counters.csv")
    write_csv(counters_path, ["predictor", "cp", "cn", "asymmetry", "degenerate"], counter_rows)
    written = [hist_path, counters_path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig5_residual_hist.svg")
        lpc_hist = residual_histogram(e_lpc)
        nn_hist = residual_histogram(e_nn)
        centers = 0.5 * (lpc_hist.bin_edges[:-1] + lpc_hist.bin_edges[1:])
        svgplot.write_line_svg(
            svg,
            centers,
            {"lpc": lpc_hist.counts, "nlpc": np.interp(centers, 0.5 * (nn_hist.bin_edges[:-1] + nn_hist.bin_edges[1:]), nn_hist.counts)},
            title=f"Residual histograms (frame {frame.index})",
            xlabel="residual",
            ylabel="count",
        )
        written.append(svg)
    record = {"frame": frame.index, "label": frame.label, "lpc_a": model.a.tolist(), "mlp": net.to_vector().tolist()}
    _write_manifest(cfg, {"train_s": t1 - t0}, [record])
    return written


def cmd_quant_sweep(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    _, frames = load_and_frame(cfg.input, cfg.frame_config())
    frame = _resolve_frame(cfg, frames)
    model = analyze_frame(frame, order=cfg.order)
    net, _ = train_multi_init(frame, cfg.train_config())
    e_lpc = lpc_residual(model, frame)
    _, e_nn = mlp_predict_frame(net, frame)
    if cfg.mode == "analysis":
        sweep = analysis_gain_sweep(frame, model, net, cfg.bits_list)
        ref_lpc = prediction_gain(frame.body, e_lpc).gp_db
        ref_nn = prediction_gain(frame.body, e_nn).gp_db
    else:
        sweep = synthesis_gain_sweep(frame, model, net, cfg.bits_list)
        ref_lpc = reconstruction_gain(frame.body, synthesis_filter(model.a, e_lpc, frame.history))
        rec_nn, _ = nn_synthesize(net, e_nn, frame.history)
        ref_nn = reconstruction_gain(frame.body, rec_nn)
    t1 = time.perf_counter()

    path = _out(cfg, f"fig7_quant_{cfg.mode}.csv")
    write_csv(
        path,
        ["bits", "gp_lpc_db", "gp_nlpc_db", "gp_lpc_ref_db", "gp_nlpc_ref_db"],
        [
            [bits, gl, gn, ref_lpc, ref_nn]
            for bits, gl, gn in zip(sweep.bits_axis, sweep.gp_lpc, sweep.gp_nlpc)
        ],
    )
    written = [path]
    if cfg.emit_svg:
        svg = _out(cfg, f"fig7_quant_{cfg.mode}.svg")
        svgplot.write_line_svg(
            svg,
            sweep.bits_axis,
            {"lpc": sweep.gp_lpc, "nlpc": sweep.gp_nlpc},
            title=f"Gain vs quantization bits ({cfg.mode}, frame {frame.index})",
            xlabel="bits",
            ylabel="Gp [dB]",
        )
        written.append(svg)
    record = {"frame": frame.index, "label": frame.label, "lpc_a": model.a.tolist(), "mlp": net.to_vector().tolist()}
    _write_manifest(cfg, {"train_s": t1 - t0}, [record])
    return written


def cmd_residual_quant(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    signal, frames = load_and_frame(cfg.input, cfg.frame_config())
    segment = voiced_segment(signal, frames, cfg.frame_config(), max_len=cfg.segment_len)
    model = analyze_frame(segment, order=cfg.order)
    net, _ = train_multi_init(segment, cfg.train_config())
    lpc_result, nn_result = residual_quant_experiment(segment, model, net, cfg.bits)
    t1 = time.perf_counter()

    err_path = _out(cfg, "fig8_residual_quant.csv")
    write_csv(
        err_path,
        ["n", "abs_err_lpc", "abs_err_nn"],
        [
            [n, le, ne]
            for n, (le, ne) in enumerate(
                zip(lpc_result.reconstruction_error, nn_result.reconstruction_error)
            )
        ],
    )
    summary_path = _out(cfg, "fig8_summary.csv")
    write_csv(
        summary_path,
        ["predictor", "bits", "useful_duration", "broke_down", "threshold"],
        [
            ["lpc", lpc_result.bits, lpc_result.useful_duration, lpc_result.broke_down, lpc_result.threshold],
            ["nn", nn_result.bits, nn_result.useful_duration, nn_result.broke_down, nn_result.threshold],
        ],
    )
    written = [err_path, summary_path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig8_residual_quant.svg")
        svgplot.write_line_svg(
            svg,
            np.arange(len(lpc_result.reconstruction_error)),
            {"lpc": lpc_result.reconstruction_error, "nn": nn_result.reconstruction_error},
            title=f"Reconstruction error, residual quantized at {cfg.bits} bits",
            xlabel="sample",
            ylabel="|error|",
        )
        written.append(svg)
    record = {
        "frame": segment.index,
        "label": segment.label,
        "lpc_a": model.a.tolist(),
        "mlp": net.to_vector().tolist(),
    }
    _write_manifest(cfg, {"train_s": t1 - t0}, [record])
    return written


def cmd_lattice_report(cfg: RunConfig) -> list[Path]:
    t0 = time.perf_counter()
    _, frames = load_and_frame(cfg.input, cfg.frame_config())
    results = analyze_corpus(frames, cfg.train_config(), lpc_order=cfg.order)
    pairs = lattice_pairs(results)
    disp = dispersion_report(pairs)
    t1 = time.perf_counter()

    disp_path = _out(cfg, "fig13_dispersion.csv")
    write_csv(
        disp_path,
        ["frame", "sigma_fir", "sigma_lattice", "log10_ratio"],
        [
            [int(f), sf, sl, lr]
            for f, sf, sl, lr in zip(disp.frame_indices, disp.sigma_fir, disp.sigma_lattice, disp.log_ratio)
        ],
    )
    summary_path = _out(cfg, "fig13_summary.csv")
    write_csv(
        summary_path,
        ["variance_ratio", "n_frames", "n_fallback_branches", "n_skipped_frames"],
        [[disp.variance_ratio, len(disp.frame_indices), disp.n_fallback_branches, disp.n_skipped_frames]],
    )
    traj_path = _out(cfg, "fig14_trajectory.csv")
    clipped = np.clip(disp.w11_trajectory, -W_TRAJECTORY_CLIP, W_TRAJECTORY_CLIP)
    write_csv(
        traj_path,
        ["frame", "w11", "w11_clipped", "k1"],
        [
            [int(f), w, wc, k]
            for f, w, wc, k in zip(disp.frame_indices, disp.w11_trajectory, clipped, disp.k1_trajectory)
        ],
    )
    written = [disp_path, summary_path, traj_path]
    if cfg.emit_svg:
        svg = _out(cfg, "fig14_trajectory.svg")
        svgplot.write_line_svg(
            svg,
            disp.frame_indices,
            {"w11_clipped": clipped, "k1": disp.k1_trajectory},
            title="First FIR weight vs first reflection coefficient",
            xlabel="frame",
            ylabel="value",
        )
        written.append(svg)
    _write_manifest(cfg, {"train_s": t1 - t0}, [_frame_record(r) for r in results])
    return written


COMMANDS = {
    "gains": cmd_gains,
    "train-curve": cmd_train_curve,
    "init-sensitivity": cmd_init_sensitivity,
    "scatter": cmd_scatter,
    "residual-hist": cmd_residual_hist,
    "quant-sweep": cmd_quant_sweep,
    "residual-quant": cmd_residual_quant,
    "lattice-report": cmd_lattice_report,
}


def run_command(cfg: RunConfig) -> list[Path]:
    """Validate and dispatch; returns the written CSV/SVG paths."""
    cfg.validate()
    return COMMANDS[cfg.command](cfg)


def replay_manifest(manifest_path, out_dir: str | None = None) -> list[Path]:
    """Re-run a past command from its manifest; outputs are byte-identical."""
    path = Path(manifest_path)
    if not path.is_file():
        raise ArgumentError(f"manifest not found: {path}")
    data = json.loads(path.read_text())
    cfg = RunConfig.from_dict(data["config"])
    if out_dir is not None:
        cfg.out_dir = out_dir
    return run_command(cfg)


def _parse_bits_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ArgumentError(f"bad bits list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlpc",
        description="Linear (LPC-12) vs nonlinear (small-MLP) speech prediction experiments.",
    )
    parser.add_argument("--version", action="version", version=f"nlpc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--input", default=str(sample_path()), help="16-bit mono PCM WAV input")
        p.add_argument("--out-dir", default="out", help="output directory")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--frame-len", type=int, default=200)
        p.add_argument("--hidden", type=int, choices=(2, 4), default=2)
        p.add_argument("--epochs", type=int, default=50)
        p.add_argument("--inits", type=int, default=5)
        p.add_argument("--order", type=int, default=12)
        p.add_argument("--bits-list", type=_parse_bits_list, default=list(DEFAULT_BITS_LIST))
        p.add_argument("--speaker", default="unknown")
        p.add_argument("--sex", default="unknown")
        p.add_argument("--emit-svg", action="store_true")

    for name, help_text in (
        ("gains", "per-frame gains and the averaged gain table"),
        ("train-curve", "SSE vs epochs for LM and backprop on one frame"),
        ("init-sensitivity", "per-init gains for 2- and 4-hidden nets"),
        ("scatter", "linear vs nonlinear gain scatter with regression"),
        ("residual-hist", "residual histograms with sign counters"),
        ("quant-sweep", "gain vs parameter-quantization bits"),
        ("residual-quant", "closed-loop synthesis with quantized residual"),
        ("lattice-report", "FIR vs lattice coefficient dispersion"),
    ):
        p = sub.add_parser(name, help=help_text)
        add_common(p)
        if name in ("train-curve", "residual-hist", "quant-sweep"):
            p.add_argument("--frame-index", type=int, default=None)
        if name == "quant-sweep":
            p.add_argument("--mode", choices=("analysis", "synthesis"), default="analysis")
        if name == "residual-quant":
            p.add_argument("--bits", type=int, default=9)
            p.add_argument("--segment-len", type=int, default=4000)

    replay = sub.add_parser("replay", help="re-run a command from its manifest")
    replay.add_argument("--manifest", required=True)
    replay.add_argument("--out-dir", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "replay":
            written = replay_manifest(args.manifest, args.out_dir)
        else:
            fields = RunConfig.__dataclass_fields__
            values = {k.replace("-", "_"): v for k, v in vars(args).items()}
            cfg = RunConfig(**{k: v for k, v in values.items() if k in fields})
            written = run_command(cfg)
    except NlpcError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
