"""Shared experiment plumbing: load/frame a file, train per frame, pick demo frames.

The CLI commands and the acceptance suite both run through these helpers
so results stay identical between the two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .audio import VOICED, AudioSignal, Frame, FrameConfig, frame_signal, load_audio, normalize, rms
from .errors import EmptyInputError, NlpcError
from .lattice import LatticeMlp, mlp_to_lattice
from .lpc import LpcModel, analyze_frame, lpc_residual, prediction_gain
from .mlp import MlpPredictor, TrainConfig, TrainTrace, train_multi_init

log = logging.getLogger("nlpc")

DEFAULT_SEGMENT_LEN = 4000


@dataclass
class FrameResult:
    """Everything trained and measured for one frame."""

    frame: Frame
    lpc_model: LpcModel | None = None
    net: MlpPredictor | None = None
    traces: list[TrainTrace] = field(default_factory=list)
    gp_lpc_db: float | None = None
    gp_nlpc_db: float | None = None
    skipped: str | None = None

    @property
    def usable(self) -> bool:
        return self.skipped is None


def load_and_frame(path, cfg: FrameConfig) -> tuple[AudioSignal, list[Frame]]:
    """Load, globally normalize, and frame an input file."""
    signal = normalize(load_audio(path))
    return signal, frame_signal(signal, cfg)


def analyze_corpus(
    frames: list[Frame], train_cfg: TrainConfig, lpc_order: int = 12
) -> list[FrameResult]:
    """Fit LPC and train the best-of-inits network on every non-silence frame.

    Per-frame failures are logged and recorded as skipped; the run continues.
    """
    results = []
    for frame in frames:
        result = FrameResult(frame=frame)
        if frame.label == "silence":
            result.skipped = "silence"
            results.append(result)
            continue
        try:
            result.lpc_model = analyze_frame(frame, order=lpc_order)
            result.gp_lpc_db = prediction_gain(frame.body, lpc_residual(result.lpc_model, frame)).gp_db
            result.net, result.traces = train_multi_init(frame, train_cfg)
            best = min(result.traces, key=lambda t: (t.final_sse, t.init_index))
            result.gp_nlpc_db = best.final_gp_db
        except NlpcError as exc:
            result.skipped = f"{exc.category}: {exc}"
            log.warning("frame %d skipped (%s)", frame.index, result.skipped)
        results.append(result)
    return results


def lattice_pairs(results: list[FrameResult]) -> list[tuple[int, MlpPredictor, LatticeMlp]]:
    """Convert every trained net; input for the dispersion report."""
    return [
        (r.frame.index, r.net, mlp_to_lattice(r.net)) for r in results if r.usable and r.net is not None
    ]


def designate_voiced_frame(frames: list[Frame]) -> int:
    """Deterministic demo-frame choice: the loudest voiced frame."""
    voiced = [f for f in frames if f.label == VOICED]
    if not voiced:
        raise EmptyInputError("no voiced frames in input")
    return max(voiced, key=lambda f: (rms(f.body), -f.index)).index


def voiced_segment(
    signal: AudioSignal, frames: list[Frame], cfg: FrameConfig, max_len: int = DEFAULT_SEGMENT_LEN
) -> Frame:
    """A long voiced stretch for the residual-quantization experiment.

    Takes the longest run of consecutive voiced frames (earliest on ties)
    and returns it as one frame, capped at ``max_len`` samples.
    """
    best_start, best_len = None, 0
    run_start, run_len = None, 0
    for frame in frames:
        if frame.label == VOICED:
            if run_start is None:
                run_start, run_len = frame.index, 0
            run_len += 1
            if run_len > best_len:
                best_start, best_len = run_start, run_len
        else:
            run_start, run_len = None, 0
    if best_start is None:
        raise EmptyInputError("no voiced frames in input")
    start = best_start * cfg.frame_len
    length = min(best_len * cfg.frame_len, max_len)
    samples = np.asarray(signal.samples)
    history = (
        samples[start - cfg.history_len : start].copy()
        if start >= cfg.history_len
        else np.zeros(cfg.history_len)
    )
    return Frame(
        index=best_start,
        history=history,
        body=samples[start : start + length].copy(),
        label=VOICED,
    )
