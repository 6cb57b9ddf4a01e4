"""The nonlinear predictor: a 10-input, 2-hidden-sigmoid, 1-linear-output net.

The predicted sample is

    x̂[n] = sum_j w2_j * sigmoid(sum_i w1_ji * x[n-i] + b1_j) + b2

with the residual convention e[n] = x[n] - x̂[n] throughout.  Training is
per frame, full batch, by Levenberg-Marquardt or plain gradient descent,
repeated over several random initializations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .audio import Frame
from .errors import SizeError, TrainingFailedError
from .lpc import prediction_gain

DEFAULT_N_INPUTS = 10
DEFAULT_N_HIDDEN = 2

LEVENBERG_MARQUARDT = "levenberg_marquardt"
BACKPROP = "backprop"

INIT_HALF_RANGE = 0.5


@dataclass(frozen=True)
class MlpPredictor:
    """Network parameters; w1 is (n_hidden, n_inputs), w2 and b1 are (n_hidden,)."""

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: float

    @property
    def n_inputs(self) -> int:
        return self.w1.shape[1]

    @property
    def n_hidden(self) -> int:
        return self.w1.shape[0]

    @property
    def n_params(self) -> int:
        return self.n_hidden * self.n_inputs + 2 * self.n_hidden + 1

    def to_vector(self) -> np.ndarray:
        """Flatten parameters in the canonical order: w1 row-major, b1, w2, b2."""
        return np.concatenate([self.w1.ravel(), self.b1, self.w2, [self.b2]])

    @classmethod
    def from_vector(cls, vec: np.ndarray, n_inputs: int, n_hidden: int) -> "MlpPredictor":
        """Rebuild a network from a canonical-order flat vector."""
        vec = np.asarray(vec, dtype=np.float64)
        expected = n_hidden * n_inputs + 2 * n_hidden + 1
        if len(vec) != expected:
            raise SizeError(f"expected {expected} parameters, got {len(vec)}")
        nw = n_hidden * n_inputs
        return cls(
            w1=vec[:nw].reshape(n_hidden, n_inputs).copy(),
            b1=vec[nw : nw + n_hidden].copy(),
            w2=vec[nw + n_hidden : nw + 2 * n_hidden].copy(),
            b2=float(vec[-1]),
        )

    def to_text(self) -> str:
        """One-line flat text record: dims followed by the canonical vector."""
        values = " ".join(format(v, ".17g") for v in self.to_vector())
        return f"{self.n_hidden} {self.n_inputs} {values}"

    @classmethod
    def from_text(cls, text: str) -> "MlpPredictor":
        parts = text.split()
        n_hidden, n_inputs = int(parts[0]), int(parts[1])
        vec = np.array([float(p) for p in parts[2:]])
        return cls.from_vector(vec, n_inputs=n_inputs, n_hidden=n_hidden)


@dataclass(frozen=True)
class TrainConfig:
    """Training protocol: 5 initializations, 50 epochs each by default."""

    epochs: int = 50
    n_inits: int = 5
    algorithm: str = LEVENBERG_MARQUARDT
    lm_mu0: float = 1e-3
    lm_mu_inc: float = 10.0
    lm_mu_dec: float = 0.1
    lm_mu_max: float = 1e10
    # Largest rate that keeps full-batch descent stable on 200-sample frames.
    bp_learning_rate: float = 0.002
    rng_seed: int = 12345
    n_inputs: int = DEFAULT_N_INPUTS
    n_hidden: int = DEFAULT_N_HIDDEN

    def __post_init__(self):
        if self.epochs <= 0 or self.n_inits <= 0:
            raise SizeError("epochs and n_inits must be positive")
        if self.lm_mu0 <= 0 or not (0 < self.lm_mu_dec < 1 < self.lm_mu_inc):
            raise SizeError("LM damping schedule must satisfy 0 < dec < 1 < inc, mu0 > 0")


@dataclass
class TrainTrace:
    """Per-run record: SSE after each accepted epoch plus final metrics."""

    sse_per_epoch: list[float] = field(default_factory=list)
    final_sse: float = float("nan")
    final_gp_db: float = float("nan")
    init_index: int = 0


def activation_sigmoid(a):
    """Logistic activation 1/(1+exp(-a)), stable for large |a|."""
    a = np.asarray(a, dtype=np.float64)
    out = np.empty_like(a)
    pos = a >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-a[pos]))
    ea = np.exp(a[~pos])
    out[~pos] = ea / (1.0 + ea)
    if out.ndim == 0:
        return float(out)
    return out


def mlp_forward(net: MlpPredictor, taps: np.ndarray) -> float:
    """Predict one sample from taps ordered most-recent-first (x[n-1]..x[n-N])."""
    taps = np.asarray(taps, dtype=np.float64)
    if len(taps) != net.n_inputs:
        raise SizeError(f"expected {net.n_inputs} taps, got {len(taps)}")
    hidden = activation_sigmoid(net.w1 @ taps + net.b1)
    return float(net.w2 @ hidden + net.b2)


def _tap_matrix(frame: Frame, n_inputs: int) -> np.ndarray:
    """(frame_len, n_inputs) matrix of most-recent-first tap windows."""
    history = np.asarray(frame.history, dtype=np.float64)
    body = np.asarray(frame.body, dtype=np.float64)
    if len(history) < n_inputs:
        raise SizeError(f"history length {len(history)} < {n_inputs} network inputs")
    ext = np.concatenate([history[len(history) - n_inputs :], body])
    windows = np.lib.stride_tricks.sliding_window_view(ext, n_inputs)[: len(body)]
    return windows[:, ::-1]


def mlp_predict_frame(net: MlpPredictor, frame: Frame) -> tuple[np.ndarray, np.ndarray]:
    """Open-loop prediction over a frame body using true past samples."""
    taps = _tap_matrix(frame, net.n_inputs)
    hidden = activation_sigmoid(taps @ net.w1.T + net.b1)
    predictions = hidden @ net.w2 + net.b2
    residual = np.asarray(frame.body, dtype=np.float64) - predictions
    return predictions, residual


def mlp_jacobian(net: MlpPredictor, frame: Frame) -> tuple[np.ndarray, np.ndarray]:
    """Analytic Jacobian J[n][p] = d e[n] / d theta_p and the residual vector.

    Parameter order: w1 row-major, b1, w2, b2.
    """
    taps = _tap_matrix(frame, net.n_inputs)
    hidden = activation_sigmoid(taps @ net.w1.T + net.b1)
    predictions = hidden @ net.w2 + net.b2
    residual = np.asarray(frame.body, dtype=np.float64) - predictions

    n_samples = taps.shape[0]
    slope = hidden * (1.0 - hidden) * net.w2  # d x̂ / d b1_j, shape (L, H)
    d_w1 = slope[:, :, None] * taps[:, None, :]  # d x̂ / d w1_ji, shape (L, H, N)
    d_xhat = np.concatenate(
        [
            d_w1.reshape(n_samples, net.n_hidden * net.n_inputs),
            slope,
            hidden,
            np.ones((n_samples, 1)),
        ],
        axis=1,
    )
    return -d_xhat, residual


def sse_gradient(net: MlpPredictor, frame: Frame) -> np.ndarray:
    """Gradient of the sum-squared error: 2 J^T e."""
    jac, residual = mlp_jacobian(net, frame)
    return 2.0 * (jac.T @ residual)


def _frame_sse(net: MlpPredictor, frame: Frame) -> float:
    _, residual = mlp_predict_frame(net, frame)
    return float(residual @ residual)


def _finish_trace(trace: TrainTrace, net: MlpPredictor, frame: Frame, sse: float) -> TrainTrace:
    trace.final_sse = sse
    _, residual = mlp_predict_frame(net, frame)
    gain = prediction_gain(frame.body, residual)
    trace.final_gp_db = gain.gp_db
    return trace


def train_lm(frame: Frame, cfg: TrainConfig, init: MlpPredictor) -> tuple[MlpPredictor, TrainTrace]:
    """Levenberg-Marquardt: damped Gauss-Newton with accept/reject steps.

    An epoch is one accepted parameter update; rejected retries only raise
    the damping factor.  Stops early once the damping exceeds lm_mu_max.
    """
    n_inputs, n_hidden = init.n_inputs, init.n_hidden
    theta = init.to_vector()
    net = init
    jac, residual = mlp_jacobian(net, frame)
    sse = float(residual @ residual)
    if not np.isfinite(sse):
        raise TrainingFailedError("initial SSE not finite", best_net=init)
    mu = cfg.lm_mu0
    trace = TrainTrace(init_index=0)
    identity = np.eye(len(theta))
    epochs_done = 0
    while epochs_done < cfg.epochs:
        gradient_half = jac.T @ residual
        hessian_approx = jac.T @ jac
        try:
            delta = np.linalg.solve(hessian_approx + mu * identity, gradient_half)
        except np.linalg.LinAlgError:
            delta = None
        if delta is not None and np.all(np.isfinite(delta)):
            theta_new = theta - delta
            net_new = MlpPredictor.from_vector(theta_new, n_inputs, n_hidden)
            sse_new = _frame_sse(net_new, frame)
        else:
            sse_new = np.inf
        if np.isfinite(sse_new) and sse_new < sse:
            theta, net, sse = theta_new, net_new, sse_new
            jac, residual = mlp_jacobian(net, frame)
            mu *= cfg.lm_mu_dec
            trace.sse_per_epoch.append(sse)
            epochs_done += 1
        else:
            mu *= cfg.lm_mu_inc
            if mu > cfg.lm_mu_max:
                break
    if not np.all(np.isfinite(theta)):
        raise TrainingFailedError("parameters not finite after training", best_net=init)
    return net, _finish_trace(trace, net, frame, sse)


def train_bp(frame: Frame, cfg: TrainConfig, init: MlpPredictor) -> tuple[MlpPredictor, TrainTrace]:
    """Full-batch gradient descent baseline, fixed learning rate, no momentum."""
    n_inputs, n_hidden = init.n_inputs, init.n_hidden
    theta = init.to_vector()
    net = init
    best_net, best_sse = init, _frame_sse(init, frame)
    trace = TrainTrace(init_index=0)
    for _ in range(cfg.epochs):
        jac, residual = mlp_jacobian(net, frame)
        gradient = 2.0 * (jac.T @ residual)
        theta = theta - cfg.bp_learning_rate * gradient
        net = MlpPredictor.from_vector(theta, n_inputs, n_hidden)
        sse = _frame_sse(net, frame)
        if not np.isfinite(sse):
            raise TrainingFailedError("backprop diverged to non-finite SSE", best_net=best_net)
        trace.sse_per_epoch.append(sse)
        if sse < best_sse:
            best_net, best_sse = net, sse
    return net, _finish_trace(trace, net, frame, trace.sse_per_epoch[-1])


def draw_init(cfg: TrainConfig, frame_index: int, init_index: int) -> MlpPredictor:
    """Deterministic initialization, uniform in [-0.5, 0.5] per parameter."""
    rng = np.random.default_rng(cfg.rng_seed ^ frame_index ^ init_index)
    vec = rng.uniform(-INIT_HALF_RANGE, INIT_HALF_RANGE, cfg.n_hidden * cfg.n_inputs + 2 * cfg.n_hidden + 1)
    return MlpPredictor.from_vector(vec, cfg.n_inputs, cfg.n_hidden)


def _train_one(frame: Frame, cfg: TrainConfig, init: MlpPredictor):
    if cfg.algorithm == LEVENBERG_MARQUARDT:
        return train_lm(frame, cfg, init)
    if cfg.algorithm == BACKPROP:
        return train_bp(frame, cfg, init)
    raise SizeError(f"unknown training algorithm {cfg.algorithm!r}")


def train_multi_init(frame: Frame, cfg: TrainConfig) -> tuple[MlpPredictor, list[TrainTrace]]:
    """Train from n_inits seeded initializations and keep the lowest final SSE.

    Ties break toward the lowest init index.  Individual failed runs are
    skipped; only a full wipe-out raises.
    """
    best_net = None
    best_trace = None
    traces: list[TrainTrace] = []
    for i in range(cfg.n_inits):
        init = draw_init(cfg, frame.index, i)
        try:
            net, trace = _train_one(frame, cfg, init)
        except TrainingFailedError:
            continue
        trace.init_index = i
        traces.append(trace)
        if best_trace is None or trace.final_sse < best_trace.final_sse:
            best_net, best_trace = net, trace
    if best_net is None:
        raise TrainingFailedError(f"all {cfg.n_inits} initializations failed on frame {frame.index}")
    return best_net, traces
