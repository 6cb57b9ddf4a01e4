"""Mono PCM loading, global normalization, framing, and frame classification.

Frames are non-overlapping windows of the signal.  Each frame carries the
samples that immediately precede it ("history") so the predictors can run
over the full frame body without zero-priming transients.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyInputError, FormatError

PCM_SCALE = 32768.0

VOICED = "voiced"
UNVOICED = "unvoiced"
SILENCE = "silence"


@dataclass(frozen=True)
class AudioSignal:
    """A mono signal with samples in [-1, 1]."""

    samples: np.ndarray
    sample_rate_hz: int

    def __post_init__(self):
        if self.sample_rate_hz <= 0:
            raise FormatError(f"sample rate must be positive, got {self.sample_rate_hz}")

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate_hz


@dataclass(frozen=True)
class FrameConfig:
    """Framing geometry and classifier thresholds.

    ``history_len`` must cover the longest predictor memory (LPC order 12
    and the 10-tap network input), and the frame must be long enough that
    per-frame training stays over-determined.
    """

    frame_len: int = 200
    history_len: int = 12
    sample_rate_hz: int = 8000
    silence_rms: float = 0.01
    voiced_rms: float = 0.02
    # Voiced iff zero-crossing rate < voiced_zcr_fraction * sample_rate (per second).
    voiced_zcr_fraction: float = 0.14

    def __post_init__(self):
        if self.history_len < 12:
            raise FormatError(f"history_len must be >= 12, got {self.history_len}")
        if self.frame_len < 2 * self.history_len:
            raise FormatError(
                f"frame_len must be >= 2*history_len, got {self.frame_len} < {2 * self.history_len}"
            )
        if self.sample_rate_hz <= 0:
            raise FormatError("sample_rate_hz must be positive")


@dataclass(frozen=True)
class Frame:
    """One analysis frame: ``history`` immediately precedes ``body`` in time."""

    index: int
    history: np.ndarray
    body: np.ndarray
    label: str


def load_audio(path) -> AudioSignal:
    """Read a 16-bit mono PCM WAV file and scale samples by 1/32768."""
    path = Path(path)
    try:
        with wave.open(str(path), "rb") as wf:
            n_channels = wf.getnchannels()
            sampwidth = wf.getsampwidth()
            comptype = wf.getcomptype()
            rate = wf.getframerate()
            n_frames = wf.getnframes()
            raw = wf.readframes(n_frames)
    except (wave.Error, EOFError) as exc:
        raise FormatError(f"{path}: not a readable WAV file ({exc})") from exc
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if comptype != "NONE":
        raise FormatError(f"{path}: compressed WAV ({comptype}) not supported")
    if n_channels != 1:
        raise FormatError(f"{path}: expected mono, got {n_channels} channels")
    if sampwidth != 2:
        raise FormatError(f"{path}: expected 16-bit samples, got {8 * sampwidth}-bit")
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / PCM_SCALE
    return AudioSignal(samples=samples, sample_rate_hz=rate)


def save_audio(path, signal: AudioSignal) -> None:
    """Write a signal as 16-bit mono PCM WAV (values clipped to full scale)."""
    ints = np.clip(np.rint(signal.samples * PCM_SCALE), -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(2)
        wf.setframerate(signal.sample_rate_hz)
        wf.writeframes(ints.tobytes())


def normalize(signal: AudioSignal, peak: float = 1.0) -> AudioSignal:
    """Rescale the whole file by one factor so max |sample| equals ``peak``.

    A single global factor preserves frame-to-frame dynamics while keeping
    the sigmoid hidden layer away from saturation.
    """
    max_abs = float(np.max(np.abs(signal.samples))) if len(signal.samples) else 0.0
    if max_abs == 0.0:
        return signal
    return AudioSignal(samples=signal.samples * (peak / max_abs), sample_rate_hz=signal.sample_rate_hz)


def rms(body: np.ndarray) -> float:
    """Root-mean-square amplitude."""
    body = np.asarray(body, dtype=np.float64)
    return float(np.sqrt(np.mean(body * body)))


def zero_crossing_rate(body: np.ndarray, sample_rate_hz: int) -> float:
    """Zero crossings per second; exact zeros count as positive."""
    signs = np.sign(np.asarray(body, dtype=np.float64))
    signs[signs == 0] = 1.0
    crossings = int(np.count_nonzero(np.diff(signs)))
    return crossings * sample_rate_hz / len(body)


def classify_frame(body: np.ndarray, cfg: FrameConfig) -> str:
    """Label a frame body as voiced, unvoiced, or silence.

    Labels only group results in reports; they never enter the math.
    """
    level = rms(body)
    if level < cfg.silence_rms:
        return SILENCE
    zcr = zero_crossing_rate(body, cfg.sample_rate_hz)
    if zcr < cfg.voiced_zcr_fraction * cfg.sample_rate_hz and level >= cfg.voiced_rms:
        return VOICED
    return UNVOICED


def frame_signal(signal: AudioSignal, cfg: FrameConfig) -> list[Frame]:
    """Split a signal into consecutive non-overlapping labelled frames.

    The trailing partial frame is dropped.  Frame 0 gets an all-zero
    history; frame k takes the ``history_len`` samples just before its body.
    """
    samples = np.asarray(signal.samples, dtype=np.float64)
    n_frames = len(samples) // cfg.frame_len
    if n_frames == 0:
        raise EmptyInputError(
            f"signal has {len(samples)} samples, shorter than one frame ({cfg.frame_len})"
        )
    frames = []
    for k in range(n_frames):
        start = k * cfg.frame_len
        body = samples[start : start + cfg.frame_len].copy()
        if start == 0:
            history = np.zeros(cfg.history_len)
        else:
            history = samples[start - cfg.history_len : start].copy()
        frames.append(Frame(index=k, history=history, body=body, label=classify_frame(body, cfg)))
    return frames
