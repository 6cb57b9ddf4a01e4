"""Uniform quantization of predictor parameters and residuals.

Covers the three quantization experiments: open-loop (analysis) parameter
quantization, closed-loop (analysis/synthesis) parameter mismatch, and
residual quantization with oscillation-onset measurement on the nonlinear
closed loop.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .audio import Frame
from .errors import SizeError
from .lpc import LpcModel, prediction_gain, residual_filter, synthesis_filter
from .mlp import MlpPredictor, activation_sigmoid, mlp_predict_frame

MIDRISE = "midrise"
MIDTREAD = "midtread"

# Closed-loop divergence sentinel: non-finite output or energy above this
# multiple of the input energy.
DIVERGENCE_ENERGY_RATIO = 100.0

# Breakdown rule for residual-quantization reconstruction error.
BREAKDOWN_THRESHOLD_STEPS = 8.0
BREAKDOWN_RUN = 20

NN_CLAMP = 10.0


@dataclass(frozen=True)
class UniformQuantizer:
    """Symmetric uniform quantizer over [-range_abs, range_abs]."""

    bits: int
    range_abs: float
    style: str = MIDRISE

    def __post_init__(self):
        if self.bits < 1:
            raise SizeError(f"bits must be >= 1, got {self.bits}")
        if self.range_abs <= 0:
            raise SizeError(f"range must be positive, got {self.range_abs}")
        if self.style not in (MIDRISE, MIDTREAD):
            raise SizeError(f"unknown quantizer style {self.style!r}")

    @property
    def step(self) -> float:
        return 2.0 * self.range_abs / (1 << self.bits)

    def quantize(self, v):
        """Map values to the nearest level; inputs outside the range clamp."""
        v = np.asarray(v, dtype=np.float64)
        half_levels = 1 << (self.bits - 1)
        if self.style == MIDRISE:
            idx = np.floor(v / self.step)
            idx = np.clip(idx, -half_levels, half_levels - 1)
            out = (idx + 0.5) * self.step
        else:
            idx = np.rint(v / self.step)
            idx = np.clip(idx, -half_levels, half_levels - 1)
            out = idx * self.step
        if out.ndim == 0:
            return float(out)
        return out


@dataclass(frozen=True)
class QuantizationInfo:
    """Side information a decoder would need: per-group ranges."""

    bits: int
    ranges: dict
    passthrough: bool = False


@dataclass(frozen=True)
class QuantSweepResult:
    """Prediction gain per bit depth for both predictors."""

    bits_axis: list[int]
    gp_lpc: list[float]
    gp_nlpc: list[float]
    mode: str


@dataclass(frozen=True)
class OscillationResult:
    """Outcome of closed-loop synthesis with a quantized residual."""

    bits: int
    reconstruction_error: np.ndarray
    useful_duration: int
    broke_down: bool
    threshold: float


def quantize_predictor_params(model, bits: int, quantize_all: bool = False):
    """Quantize trained parameters with per-frame max-abs ranges.

    For an MlpPredictor only the first-layer weights are quantized (the
    output layer stays full precision unless ``quantize_all``); for an
    LpcModel all predictor coefficients are.  Returns (quantized copy,
    QuantizationInfo).  An all-zero group passes through with a flag.

    The quantized LpcModel keeps the k and err of the unquantized analysis;
    only ``a`` is consumed downstream.
    """
    if isinstance(model, MlpPredictor):
        groups = {"w1": model.w1}
        if quantize_all:
            groups.update({"b1": model.b1, "w2": model.w2, "b2": np.array([model.b2])})
        ranges = {}
        quantized = {}
        passthrough = False
        for name, values in groups.items():
            a = float(np.max(np.abs(values)))
            if a == 0.0:
                ranges[name] = 0.0
                quantized[name] = values.copy()
                passthrough = True
                continue
            q = UniformQuantizer(bits=bits, range_abs=a)
            ranges[name] = a
            quantized[name] = q.quantize(values)
        net = replace(
            model,
            w1=quantized["w1"],
            b1=quantized["b1"] if "b1" in quantized else model.b1,
            w2=quantized["w2"] if "w2" in quantized else model.w2,
            b2=float(quantized["b2"][0]) if "b2" in quantized else model.b2,
        )
        return net, QuantizationInfo(bits=bits, ranges=ranges, passthrough=passthrough)
    if isinstance(model, LpcModel):
        a_max = float(np.max(np.abs(model.a)))
        if a_max == 0.0:
            return model, QuantizationInfo(bits=bits, ranges={"a": 0.0}, passthrough=True)
        q = UniformQuantizer(bits=bits, range_abs=a_max)
        return (
            replace(model, a=q.quantize(model.a)),
            QuantizationInfo(bits=bits, ranges={"a": a_max}),
        )
    raise SizeError(f"cannot quantize object of type {type(model).__name__}")


def nn_synthesize(
    net: MlpPredictor, excitation: np.ndarray, history: np.ndarray
) -> tuple[np.ndarray, int]:
    """Closed-loop nonlinear synthesis feeding back reconstructed samples.

    Exact inverse of mlp_predict_frame when the excitation is the
    unquantized residual.  Non-finite outputs are clamped to +-10 and
    counted; the sigmoid keeps ordinary nets bounded, so clamps indicate
    pathological parameters.
    """
    excitation = np.asarray(excitation, dtype=np.float64)
    history = np.asarray(history, dtype=np.float64)
    n = net.n_inputs
    if len(history) < n:
        raise SizeError(f"history length {len(history)} < {n} network inputs")
    buf = np.concatenate([history[len(history) - n :], np.zeros(len(excitation))])
    w1, b1, w2, b2 = net.w1, net.b1, net.w2, net.b2
    clamped = 0
    for i, exc in enumerate(excitation):
        taps = buf[i : i + n][::-1]
        hidden = activation_sigmoid(w1 @ taps + b1)
        value = float(w2 @ hidden + b2) + exc
        if not np.isfinite(value):
            value = NN_CLAMP if (np.isnan(value) or value > 0) else -NN_CLAMP
            clamped += 1
        buf[n + i] = value
    return buf[n:], clamped


def detect_divergence(output: np.ndarray, reference: np.ndarray) -> bool:
    """Closed-loop instability sentinel: non-finite or energy blow-up."""
    output = np.asarray(output, dtype=np.float64)
    if not np.all(np.isfinite(output)):
        return True
    ref_energy = float(np.dot(reference, reference))
    return float(np.dot(output, output)) > DIVERGENCE_ENERGY_RATIO * ref_energy


def analysis_gain_sweep(
    frame: Frame, model: LpcModel, net: MlpPredictor, bits_list: list[int]
) -> QuantSweepResult:
    """Open-loop gains with quantized parameters, per bit depth."""
    gp_lpc, gp_nlpc = [], []
    for bits in bits_list:
        q_model, _ = quantize_predictor_params(model, bits)
        e_lpc = residual_filter(q_model.a, frame.body, frame.history)
        gp_lpc.append(prediction_gain(frame.body, e_lpc).gp_db)
        q_net, _ = quantize_predictor_params(net, bits)
        _, e_nn = mlp_predict_frame(q_net, frame)
        gp_nlpc.append(prediction_gain(frame.body, e_nn).gp_db)
    return QuantSweepResult(bits_axis=list(bits_list), gp_lpc=gp_lpc, gp_nlpc=gp_nlpc, mode="analysis")


def synthesis_gain_sweep(
    frame: Frame, model: LpcModel, net: MlpPredictor, bits_list: list[int]
) -> QuantSweepResult:
    """Closed-loop gains: residual from exact parameters, synthesis from quantized.

    The gain is measured between the original body and the reconstruction
    error x - x_rec; a diverging loop is recorded as -inf dB, not raised.
    """
    e_lpc = residual_filter(model.a, frame.body, frame.history)
    _, e_nn = mlp_predict_frame(net, frame)
    gp_lpc, gp_nlpc = [], []
    for bits in bits_list:
        q_model, _ = quantize_predictor_params(model, bits)
        rec = synthesis_filter(q_model.a, e_lpc, frame.history)
        gp_lpc.append(reconstruction_gain(frame.body, rec))
        q_net, _ = quantize_predictor_params(net, bits)
        rec_nn, _ = nn_synthesize(q_net, e_nn, frame.history)
        gp_nlpc.append(reconstruction_gain(frame.body, rec_nn))
    return QuantSweepResult(
        bits_axis=list(bits_list), gp_lpc=gp_lpc, gp_nlpc=gp_nlpc, mode="analysis_synthesis"
    )


def reconstruction_gain(body: np.ndarray, reconstruction: np.ndarray) -> float:
    if detect_divergence(reconstruction, body):
        return float("-inf")
    return prediction_gain(body, body - reconstruction).gp_db


def _useful_duration(error: np.ndarray, threshold: float) -> int:
    """First index where the error stays above threshold for BREAKDOWN_RUN samples."""
    mask = (np.abs(error) > threshold).astype(int)
    if len(mask) < BREAKDOWN_RUN:
        return len(error)
    runs = np.convolve(mask, np.ones(BREAKDOWN_RUN, dtype=int), mode="valid")
    hits = np.nonzero(runs == BREAKDOWN_RUN)[0]
    return int(hits[0]) if len(hits) else len(error)


def residual_quant_experiment(
    frame: Frame, model: LpcModel, net: MlpPredictor, bits: int
) -> tuple[OscillationResult, OscillationResult]:
    """Quantize each predictor's residual, resynthesize, and find breakdown onset.

    Returns (linear result, nonlinear result).  The breakdown threshold is
    8 quantizer steps sustained over 20 consecutive samples, so it scales
    with the residual range and ignores single-sample spikes.
    """
    results = []
    e_lpc = residual_filter(model.a, frame.body, frame.history)
    _, e_nn = mlp_predict_frame(net, frame)
    for kind, residual in (("lpc", e_lpc), ("nn", e_nn)):
        peak = float(np.max(np.abs(residual)))
        if peak == 0.0:
            rec = frame.body.copy()
            threshold = 0.0
        else:
            q = UniformQuantizer(bits=bits, range_abs=peak)
            quantized = q.quantize(residual)
            threshold = BREAKDOWN_THRESHOLD_STEPS * q.step
            if kind == "lpc":
                rec = synthesis_filter(model.a, quantized, frame.history)
            else:
                rec, _ = nn_synthesize(net, quantized, frame.history)
        error = np.abs(frame.body - rec)
        duration = _useful_duration(error, threshold) if threshold > 0 else len(error)
        results.append(
            OscillationResult(
                bits=bits,
                reconstruction_error=error,
                useful_duration=duration,
                broke_down=duration < len(error),
                threshold=threshold,
            )
        )
    return results[0], results[1]
