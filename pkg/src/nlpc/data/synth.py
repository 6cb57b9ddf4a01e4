"""Deterministic speech-like test signal.

No recorded corpus ships with the package, so the bundled sample is a
synthesized utterance: voiced stretches are glottal-pulse trains shaped by
formant resonators and a saturating (hence nonlinear) vocal-tract stage,
interleaved with fricative-like noise bursts and near-silences.  Run
``python -m nlpc.data.synth`` to regenerate ``sample.wav``.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from ..audio import AudioSignal, save_audio

SAMPLE_RATE = 8000
SAMPLE_SEED = 20260810

# (kind, duration_s, params); voiced params are (f0_hz, f1_hz, f2_hz).
SEGMENT_PLAN = [
    ("sil", 0.25, None),
    ("v", 0.50, (110.0, 420.0, 1100.0)),
    ("uv", 0.28, None),
    ("v", 0.55, (95.0, 340.0, 900.0)),
    ("sil", 0.18, None),
    ("v", 0.45, (125.0, 520.0, 1500.0)),
    ("uv", 0.25, None),
    ("v", 0.60, (105.0, 380.0, 1250.0)),
    ("sil", 0.15, None),
    ("v", 0.50, (118.0, 460.0, 1000.0)),
    ("uv", 0.30, None),
    ("v", 0.55, (100.0, 350.0, 1400.0)),
    ("sil", 0.18, None),
    ("v", 0.42, (130.0, 500.0, 1150.0)),
    ("uv", 0.24, None),
    ("sil", 0.15, None),
]

GLOTTAL_OPEN_FRACTION = 0.40
GLOTTAL_CLOSE_FRACTION = 0.16
ASPIRATION_LEVEL = 0.012
SATURATION_DRIVE = 3.0
EVEN_ORDER_SKEW = 0.35
VOICED_NOISE_FLOOR = 2.5e-3
UNVOICED_RMS = 0.055
SILENCE_RMS = 8e-4
EDGE_FADE_S = 0.010
PEAK = 0.95


def _glottal_pulse(period: int) -> np.ndarray:
    """Rosenberg-style pulse: smooth opening, faster closing, zero-mean tail."""
    t_open = max(2, int(GLOTTAL_OPEN_FRACTION * period))
    t_close = max(1, int(GLOTTAL_CLOSE_FRACTION * period))
    opening = 0.5 * (1.0 - np.cos(np.pi * np.arange(t_open) / t_open))
    closing = np.cos(0.5 * np.pi * np.arange(t_close) / t_close)
    pulse = np.zeros(period)
    pulse[:t_open] = opening
    pulse[t_open : t_open + t_close] = closing
    return pulse - pulse.mean()


def _formant_filter(f1: float, f2: float, fs: int) -> np.ndarray:
    """Denominator polynomial with one pole pair per formant."""
    poles = []
    for freq, radius in ((f1, 0.96), (f2, 0.90)):
        angle = 2.0 * np.pi * freq / fs
        poles += [radius * np.exp(1j * angle), radius * np.exp(-1j * angle)]
    return np.real(np.poly(poles))


def _voiced(rng: np.random.Generator, n: int, f0: float, f1: float, f2: float, fs: int) -> np.ndarray:
    period = int(round(fs / f0))
    pulse = _glottal_pulse(period)
    excitation = np.zeros(n + period)
    pos = 0
    while pos + period <= len(excitation):
        jitter = 1.0 + rng.normal(0.0, 0.004)
        amp = 1.0 + rng.normal(0.0, 0.03)
        excitation[pos : pos + period] += amp * pulse
        pos += max(2, int(round(period * jitter)))
    excitation = excitation[:n] + rng.normal(0.0, ASPIRATION_LEVEL, n)
    shaped = lfilter([1.0], _formant_filter(f1, f2, fs), excitation)
    shaped /= np.max(np.abs(shaped)) + 1e-12
    # Saturating vocal-tract stage with a mild even-order term: this is what
    # puts genuinely nonlinear sample-to-sample structure into the signal.
    drive = SATURATION_DRIVE * shaped
    out = np.tanh(drive + EVEN_ORDER_SKEW * drive * drive) / SATURATION_DRIVE
    out += rng.normal(0.0, VOICED_NOISE_FLOOR, n)
    return out


def _unvoiced(rng: np.random.Generator, n: int, fs: int) -> np.ndarray:
    noise = rng.normal(0.0, 1.0, n)
    angle = 2.0 * np.pi * 2600.0 / fs
    denom = np.real(np.poly([0.70 * np.exp(1j * angle), 0.70 * np.exp(-1j * angle)]))
    shaped = lfilter([1.0], denom, noise)
    shaped *= UNVOICED_RMS / (np.sqrt(np.mean(shaped**2)) + 1e-12)
    return shaped


def synthesize_speech_like(
    sample_rate_hz: int = SAMPLE_RATE, seed: int = SAMPLE_SEED
) -> AudioSignal:
    """Build the full utterance, peak-normalized to 0.95."""
    rng = np.random.default_rng(seed)
    fade = int(EDGE_FADE_S * sample_rate_hz)
    ramp = 0.5 * (1.0 - np.cos(np.pi * np.arange(fade) / fade))
    pieces = []
    for kind, duration, params in SEGMENT_PLAN:
        n = int(round(duration * sample_rate_hz))
        if kind == "sil":
            piece = rng.normal(0.0, SILENCE_RMS, n)
        elif kind == "uv":
            piece = _unvoiced(rng, n, sample_rate_hz)
        else:
            piece = _voiced(rng, n, params[0], params[1], params[2], sample_rate_hz)
        piece = piece.copy()
        piece[:fade] *= ramp
        piece[-fade:] *= ramp[::-1]
        pieces.append(piece)
    samples = np.concatenate(pieces)
    samples *= PEAK / np.max(np.abs(samples))
    return AudioSignal(samples=samples, sample_rate_hz=sample_rate_hz)


def main() -> None:
    from . import sample_path

    signal = synthesize_speech_like()
    save_audio(sample_path(), signal)
    print(f"wrote {sample_path()} ({signal.duration_s:.2f} s at {signal.sample_rate_hz} Hz)")


if __name__ == "__main__":
    main()
