"""Order-12 linear prediction: autocorrelation, Levinson-Durbin, filtering, gain.

Analysis and synthesis both prime the filter with true preceding samples
(the frame history) so per-frame gains are free of start-up transients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter, lfiltic

from .audio import Frame
from .errors import DegenerateFrameError, NumericalSingularityError, SizeError

DEFAULT_ORDER = 12


@dataclass(frozen=True)
class LpcModel:
    """Predictor coefficients a (x̂[n] = sum a_i x[n-i]) with companion data.

    ``k`` holds the reflection coefficients produced by the recursion and
    ``err`` the final prediction-error energy; all |k_i| < 1 implies a
    stable synthesis filter.
    """

    order: int
    a: np.ndarray
    k: np.ndarray
    err: float


@dataclass(frozen=True)
class GainResult:
    """Prediction gain in dB plus the energies it was computed from."""

    gp_db: float
    signal_energy: float
    error_energy: float
    infinite: bool = False


def autocorrelation(body: np.ndarray, max_lag: int) -> np.ndarray:
    """Autocorrelation lags r[0..max_lag] with r[m] = sum body[n]*body[n-m]."""
    body = np.asarray(body, dtype=np.float64)
    n = len(body)
    if n <= max_lag:
        raise SizeError(f"body length {n} must exceed max_lag {max_lag}")
    full = np.correlate(body, body, mode="full")
    return full[n - 1 : n + max_lag].copy()


def levinson_durbin(r: np.ndarray, order: int) -> LpcModel:
    """Solve the Toeplitz normal equations by the Levinson-Durbin recursion."""
    r = np.asarray(r, dtype=np.float64)
    if len(r) < order + 1:
        raise SizeError(f"need {order + 1} lags for order {order}, got {len(r)}")
    if r[0] <= 0.0:
        raise DegenerateFrameError(f"zero-lag autocorrelation must be positive, got {r[0]}")
    a = np.zeros(order)
    k = np.zeros(order)
    err = float(r[0])
    for m in range(1, order + 1):
        acc = r[m] - np.dot(a[: m - 1], r[m - 1 : 0 : -1])
        km = acc / err
        k[m - 1] = km
        head = a[: m - 1] - km * a[: m - 1][::-1]
        a[: m - 1] = head
        a[m - 1] = km
        err *= 1.0 - km * km
        if err <= 0.0:
            raise NumericalSingularityError(
                f"prediction-error energy {err} not positive at stage {m}"
            )
    return LpcModel(order=order, a=a, k=k, err=err)


def residual_filter(a: np.ndarray, body: np.ndarray, history: np.ndarray) -> np.ndarray:
    """Inverse-filter a body: e[n] = body[n] - sum a_i x[n-i], x reaching into history."""
    a = np.asarray(a, dtype=np.float64)
    body = np.asarray(body, dtype=np.float64)
    history = np.asarray(history, dtype=np.float64)
    order = len(a)
    if len(history) < order:
        raise SizeError(f"history length {len(history)} < order {order}")
    ext = np.concatenate([history[len(history) - order :], body])
    fir = np.concatenate([[1.0], -a])
    return lfilter(fir, [1.0], ext)[order:]


def synthesis_filter(a: np.ndarray, excitation: np.ndarray, history: np.ndarray) -> np.ndarray:
    """Run the all-pole synthesis y[n] = excitation[n] + sum a_i y[n-i].

    Divergence is a legitimate outcome for unstable coefficient sets; it is
    detected downstream, never raised here.
    """
    a = np.asarray(a, dtype=np.float64)
    excitation = np.asarray(excitation, dtype=np.float64)
    history = np.asarray(history, dtype=np.float64)
    order = len(a)
    if len(history) < order:
        raise SizeError(f"history length {len(history)} < order {order}")
    denom = np.concatenate([[1.0], -a])
    zi = lfiltic([1.0], denom, history[::-1][:order])
    out, _ = lfilter([1.0], denom, excitation, zi=zi)
    return out


def lpc_residual(model: LpcModel, frame: Frame) -> np.ndarray:
    """Prediction error of a frame body under the model."""
    return residual_filter(model.a, frame.body, frame.history)


def lpc_synthesize(model: LpcModel, excitation: np.ndarray, history: np.ndarray) -> np.ndarray:
    """Reconstruct from an excitation; exact inverse of lpc_residual."""
    return synthesis_filter(model.a, excitation, history)


def prediction_gain(body: np.ndarray, residual: np.ndarray) -> GainResult:
    """Gp = 10*log10(signal energy / residual energy), in dB."""
    body = np.asarray(body, dtype=np.float64)
    residual = np.asarray(residual, dtype=np.float64)
    if len(body) != len(residual):
        raise SizeError(f"body length {len(body)} != residual length {len(residual)}")
    signal_energy = float(np.dot(body, body))
    error_energy = float(np.dot(residual, residual))
    if signal_energy <= 0.0:
        raise DegenerateFrameError("frame body has zero energy")
    if error_energy == 0.0:
        return GainResult(gp_db=math.inf, signal_energy=signal_energy, error_energy=0.0, infinite=True)
    return GainResult(
        gp_db=10.0 * math.log10(signal_energy / error_energy),
        signal_energy=signal_energy,
        error_energy=error_energy,
    )


def analyze_frame(frame: Frame, order: int = DEFAULT_ORDER) -> LpcModel:
    """Fit an LPC model to a frame body (autocorrelation method, no taper)."""
    r = autocorrelation(frame.body, order)
    return levinson_durbin(r, order)


def analyze_frame_windowed(frame: Frame, order: int = DEFAULT_ORDER) -> LpcModel:
    """Hamming-windowed variant, kept for robustness comparisons."""
    windowed = frame.body * np.hamming(len(frame.body))
    r = autocorrelation(windowed, order)
    return levinson_durbin(r, order)
