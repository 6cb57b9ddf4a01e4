"""Lattice form of the MLP first layer: taps <-> reflection coefficients.

Each hidden branch sum w_i*x[n-i] is read as the predictor half of the
monic error polynomial A(z) = 1 - sum w_i z^-i.  The branch is realized on
an all-zero lattice as x[n] - f_M[n] (forward error subtracted from the
current sample), which reproduces the FIR branch exactly, with no extra
gain term.  Trained branches need not be minimum phase, so |K| > 1 is
legal; only |K| = 1 is a conversion singularity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .audio import Frame
from .errors import ConversionSingularError, EmptyInputError, SizeError
from .mlp import MlpPredictor, activation_sigmoid

UNIT_K_TOL = 1e-12

# Display-only clipping for first-weight trajectories; raw values are kept.
W_TRAJECTORY_CLIP = 10.0


@dataclass(frozen=True)
class LatticeBranch:
    """One hidden branch: reflection coefficients K_1..K_M plus its bias.

    When the conversion was singular, ``k`` is None and ``fir_taps`` keeps
    the branch in direct form; nothing is silently dropped.
    """

    k: np.ndarray | None
    bias: float
    fir_taps: np.ndarray | None = None

    @property
    def converted(self) -> bool:
        return self.k is not None

    @property
    def order(self) -> int:
        return len(self.k) if self.k is not None else len(self.fir_taps)


@dataclass(frozen=True)
class LatticeMlp:
    """Structural mirror of an MlpPredictor with lattice first-layer branches."""

    branches: tuple[LatticeBranch, ...]
    w2: np.ndarray
    b2: float
    n_inputs: int

    @property
    def n_hidden(self) -> int:
        return len(self.branches)

    @property
    def n_fallback(self) -> int:
        return sum(1 for b in self.branches if not b.converted)

    @property
    def fully_converted(self) -> bool:
        return self.n_fallback == 0

    def to_vector(self) -> np.ndarray:
        """Flat record, K first (the leading coefficients matter most)."""
        if not self.fully_converted:
            raise ConversionSingularError("cannot serialize a net with FIR fallback branches")
        ks = np.concatenate([b.k for b in self.branches])
        biases = np.array([b.bias for b in self.branches])
        return np.concatenate([ks, biases, self.w2, [self.b2]])


def fir_to_lattice(taps: np.ndarray) -> np.ndarray:
    """Step-down recursion from branch taps w_1..w_M to K_1..K_M."""
    taps = np.asarray(taps, dtype=np.float64)
    if len(taps) < 1:
        raise SizeError("need at least one tap")
    alpha = -taps.copy()
    m = len(alpha)
    k = np.zeros(m)
    for stage in range(m, 0, -1):
        km = alpha[stage - 1]
        if abs(abs(km) - 1.0) < UNIT_K_TOL:
            raise ConversionSingularError(f"|K_{stage}| = {abs(km)} within {UNIT_K_TOL} of 1")
        k[stage - 1] = km
        if stage > 1:
            head = alpha[: stage - 1]
            alpha = (head - km * head[::-1]) / (1.0 - km * km)
    return k


def lattice_to_fir(k: np.ndarray) -> np.ndarray:
    """Step-up recursion from reflection coefficients back to branch taps."""
    k = np.asarray(k, dtype=np.float64)
    alpha = np.zeros(0)
    for m in range(1, len(k) + 1):
        km = k[m - 1]
        grown = np.empty(m)
        grown[: m - 1] = alpha + km * alpha[::-1]
        grown[m - 1] = km
        alpha = grown
    return -alpha


def mlp_to_lattice(net: MlpPredictor) -> LatticeMlp:
    """Convert every hidden branch; singular branches stay FIR and are counted."""
    branches = []
    for j in range(net.n_hidden):
        taps = net.w1[j]
        bias = float(net.b1[j])
        try:
            branches.append(LatticeBranch(k=fir_to_lattice(taps), bias=bias))
        except ConversionSingularError:
            branches.append(LatticeBranch(k=None, bias=bias, fir_taps=taps.copy()))
    return LatticeMlp(
        branches=tuple(branches), w2=net.w2.copy(), b2=float(net.b2), n_inputs=net.n_inputs
    )


def lattice_to_mlp(net: LatticeMlp) -> MlpPredictor:
    """Reassemble the direct-form network (FIR-fallback branches pass through)."""
    w1 = np.vstack(
        [b.fir_taps if not b.converted else lattice_to_fir(b.k) for b in net.branches]
    )
    b1 = np.array([b.bias for b in net.branches])
    return MlpPredictor(w1=w1, b1=b1, w2=net.w2.copy(), b2=net.b2)


def _lattice_forward_error(k: np.ndarray, window: np.ndarray) -> np.ndarray:
    """Forward error f_M over a chronological window, zero initial state.

    Outputs are exact from index len(k) onward; earlier entries carry the
    start-up transient.
    """
    f = window.astype(np.float64, copy=True)
    b = window.astype(np.float64, copy=True)
    for km in k:
        b_prev = np.concatenate([[0.0], b[:-1]])
        f, b = f + km * b_prev, b_prev + km * f
    return f


def lattice_branch_output(branch: LatticeBranch, taps: np.ndarray, current: float) -> float:
    """Branch pre-activation via the lattice: x[n] - f_M[n] + bias.

    ``taps`` are ordered most-recent-first, as for mlp_forward.
    """
    taps = np.asarray(taps, dtype=np.float64)
    if not branch.converted:
        return float(branch.fir_taps @ taps + branch.bias)
    if len(taps) != len(branch.k):
        raise SizeError(f"expected {len(branch.k)} taps, got {len(taps)}")
    window = np.concatenate([taps[::-1], [current]])
    f = _lattice_forward_error(branch.k, window)
    return float(current - f[-1] + branch.bias)


def lattice_mlp_forward(net: LatticeMlp, taps: np.ndarray, current: float) -> float:
    """Predict one sample; combines branch outputs exactly as mlp_forward."""
    pre = np.array([lattice_branch_output(b, taps, current) for b in net.branches])
    hidden = activation_sigmoid(pre)
    return float(net.w2 @ hidden + net.b2)


def lattice_predict_frame(net: LatticeMlp, frame: Frame) -> tuple[np.ndarray, np.ndarray]:
    """Open-loop frame prediction in the lattice parameterization.

    Runs each branch's lattice once over history + body; history kills the
    start-up transient, so body outputs are exact.
    """
    history = np.asarray(frame.history, dtype=np.float64)
    body = np.asarray(frame.body, dtype=np.float64)
    n = net.n_inputs
    if len(history) < n:
        raise SizeError(f"history length {len(history)} < {n} inputs")
    ext = np.concatenate([history[len(history) - n :], body])
    pre = np.empty((len(body), net.n_hidden))
    for j, branch in enumerate(net.branches):
        if branch.converted:
            f = _lattice_forward_error(branch.k, ext)
            pre[:, j] = ext[n:] - f[n:] + branch.bias
        else:
            windows = np.lib.stride_tricks.sliding_window_view(ext, n)[: len(body)]
            pre[:, j] = windows[:, ::-1] @ branch.fir_taps + branch.bias
    hidden = activation_sigmoid(pre)
    predictions = hidden @ net.w2 + net.b2
    return predictions, body - predictions


@dataclass(frozen=True)
class DispersionReport:
    """Spread of FIR taps vs reflection coefficients over trained frames."""

    frame_indices: np.ndarray
    sigma_fir: np.ndarray
    sigma_lattice: np.ndarray
    log_ratio: np.ndarray
    variance_ratio: float
    w11_trajectory: np.ndarray
    k1_trajectory: np.ndarray
    n_fallback_branches: int
    n_skipped_frames: int


def dispersion_report(pairs: list[tuple[int, MlpPredictor, LatticeMlp]]) -> DispersionReport:
    """Per-frame std of taps vs Ks, pooled variance ratio, and trajectories.

    Frames with any FIR-fallback branch are excluded from the statistics
    but tallied in ``n_skipped_frames``.
    """
    if not pairs:
        raise EmptyInputError("no trained frames to report on")
    indices, sig_f, sig_l, w11, k1 = [], [], [], [], []
    pooled_fir, pooled_lat = [], []
    n_fallback = 0
    n_skipped = 0
    for frame_index, fir_net, lat_net in pairs:
        n_fallback += lat_net.n_fallback
        if not lat_net.fully_converted:
            n_skipped += 1
            continue
        taps = fir_net.w1.ravel()
        ks = np.concatenate([b.k for b in lat_net.branches])
        indices.append(frame_index)
        sig_f.append(float(np.std(taps)))
        sig_l.append(float(np.std(ks)))
        w11.append(float(fir_net.w1[0, 0]))
        k1.append(float(lat_net.branches[0].k[0]))
        pooled_fir.append(taps)
        pooled_lat.append(ks)
    if not indices:
        raise EmptyInputError("every frame failed conversion; nothing to report")
    sigma_fir = np.array(sig_f)
    sigma_lattice = np.array(sig_l)
    with np.errstate(divide="ignore"):
        log_ratio = np.log10(sigma_fir / sigma_lattice)
    var_fir = float(np.var(np.concatenate(pooled_fir)))
    var_lat = float(np.var(np.concatenate(pooled_lat)))
    return DispersionReport(
        frame_indices=np.array(indices),
        sigma_fir=sigma_fir,
        sigma_lattice=sigma_lattice,
        log_ratio=log_ratio,
        variance_ratio=var_fir / var_lat if var_lat > 0 else float("inf"),
        w11_trajectory=np.array(w11),
        k1_trajectory=np.array(k1),
        n_fallback_branches=n_fallback,
        n_skipped_frames=n_skipped,
    )
