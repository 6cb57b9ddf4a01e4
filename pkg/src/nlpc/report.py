"""Corpus statistics and figure-data serialization.

Every figure gets one CSV (or a small fixed set) with a mandatory header
row, fixed column order, and floats printed with 6 significant digits so
re-runs are byte-identical.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DegenerateFrameError, EmptyInputError, SizeError
from .mlp import TrainTrace

DEFAULT_HIST_BINS = 25


@dataclass(frozen=True)
class FrameGainRecord:
    """Per-frame gains plus the metadata reports group by."""

    frame_index: int
    label: str
    gp_lpc_db: float
    gp_nlpc_db: float
    speaker: str = "unknown"
    sex: str = "unknown"


@dataclass(frozen=True)
class GainTableRow:
    group: str
    count: int
    mean_gp_lpc_db: float
    std_gp_lpc_db: float
    mean_gp_nlpc_db: float
    std_gp_nlpc_db: float


@dataclass(frozen=True)
class GainTable:
    rows: list[GainTableRow]
    total_frames: int
    notes: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class GainScatter:
    """Gain pairs with an OLS fit of nonlinear gain on linear gain."""

    points: np.ndarray  # (n, 2) columns (gp_lpc, gp_nlpc)
    slope: float
    intercept: float
    fraction_above_diagonal: float
    degenerate: bool = False


@dataclass(frozen=True)
class ResidualHistogram:
    """Histogram plus sign counters on the raw residual values.

    cp counts strictly positive residuals and cn strictly negative ones;
    asymmetry = |cp - cn| / (cp + cn).
    """

    bin_edges: np.ndarray
    counts: np.ndarray
    cp: int
    cn: int
    asymmetry: float
    degenerate: bool = False


def gain_table(records: list[FrameGainRecord], group_by: tuple[str, ...] = ("label",)) -> GainTable:
    """Arithmetic mean and population std of gains per group; silence excluded."""
    if not records:
        raise EmptyInputError("no frame gains to tabulate")
    usable = [r for r in records if r.label != "silence"]
    groups: dict[str, list[FrameGainRecord]] = {}
    for rec in usable:
        key = "/".join(str(getattr(rec, name)) for name in group_by)
        groups.setdefault(key, []).append(rec)
    rows = []
    notes = []
    for key in sorted(groups):
        members = groups[key]
        if not members:
            notes.append(f"group {key} empty, omitted")
            continue
        lpc = np.array([r.gp_lpc_db for r in members])
        nlpc = np.array([r.gp_nlpc_db for r in members])
        rows.append(
            GainTableRow(
                group=key,
                count=len(members),
                mean_gp_lpc_db=float(np.mean(lpc)),
                std_gp_lpc_db=float(np.std(lpc)),
                mean_gp_nlpc_db=float(np.mean(nlpc)),
                std_gp_nlpc_db=float(np.std(nlpc)),
            )
        )
    return GainTable(rows=rows, total_frames=len(usable), notes=notes)


def gain_scatter(pairs: np.ndarray) -> GainScatter:
    """OLS line of nonlinear gain on linear gain plus the above-diagonal fraction."""
    pairs = np.asarray(pairs, dtype=np.float64)
    if pairs.ndim != 2 or pairs.shape[1] != 2 or pairs.shape[0] < 2:
        raise SizeError("need at least two (gp_lpc, gp_nlpc) pairs")
    x, y = pairs[:, 0], pairs[:, 1]
    fraction_above = float(np.mean(y > x))
    var_x = float(np.var(x))
    if var_x == 0.0:
        return GainScatter(
            points=pairs,
            slope=float("nan"),
            intercept=float(np.mean(y)),
            fraction_above_diagonal=fraction_above,
            degenerate=True,
        )
    slope = float(np.mean((x - x.mean()) * (y - y.mean())) / var_x)
    intercept = float(y.mean() - slope * x.mean())
    return GainScatter(
        points=pairs, slope=slope, intercept=intercept, fraction_above_diagonal=fraction_above
    )


def residual_histogram(residual: np.ndarray, n_bins: int = DEFAULT_HIST_BINS) -> ResidualHistogram:
    """Equal-width histogram over [min, max] with sign counters on raw values."""
    residual = np.asarray(residual, dtype=np.float64)
    if len(residual) == 0:
        raise EmptyInputError("empty residual")
    if n_bins < 2:
        raise SizeError(f"need at least 2 bins, got {n_bins}")
    cp = int(np.count_nonzero(residual > 0))
    cn = int(np.count_nonzero(residual < 0))
    signed = cp + cn
    asymmetry = abs(cp - cn) / signed if signed else 0.0
    lo, hi = float(residual.min()), float(residual.max())
    if lo == hi:
        return ResidualHistogram(
            bin_edges=np.array([lo, hi]),
            counts=np.array([len(residual)]),
            cp=cp,
            cn=cn,
            asymmetry=asymmetry,
            degenerate=True,
        )
    counts, edges = np.histogram(residual, bins=n_bins, range=(lo, hi))
    return ResidualHistogram(bin_edges=edges, counts=counts, cp=cp, cn=cn, asymmetry=asymmetry)


def training_curves(traces: dict[str, TrainTrace]) -> tuple[list[str], list[list]]:
    """Epoch-indexed SSE columns, padded to equal length by carrying the last value."""
    if not traces:
        raise EmptyInputError("no training traces")
    names = sorted(traces)
    length = max(len(traces[n].sse_per_epoch) for n in names)
    if length == 0:
        raise DegenerateFrameError("no accepted epochs in any trace")
    header = ["epoch"] + [f"sse_{n}" for n in names]
    rows = []
    for i in range(length):
        row: list = [i + 1]
        for n in names:
            seq = traces[n].sse_per_epoch
            row.append(seq[i] if i < len(seq) else seq[-1])
        rows.append(row)
    return header, rows


def init_sensitivity_table(
    frame_rows: list[dict], hidden_sizes: tuple[int, ...] = (2, 4)
) -> tuple[list[str], list[list]]:
    """Rows per frame: Gp per init and hidden size, plus the LPC-12 reference.

    Each input dict carries ``frame_index``, ``gp_lpc_db``, and
    ``gp_by_hidden`` mapping hidden size -> per-init gains.
    """
    if not frame_rows:
        raise EmptyInputError("no frames")
    n_inits = len(frame_rows[0]["gp_by_hidden"][hidden_sizes[0]])
    for row in frame_rows:
        for h in hidden_sizes:
            if len(row["gp_by_hidden"][h]) != n_inits:
                raise SizeError("inconsistent init counts across frames")
    header = ["frame"]
    for h in hidden_sizes:
        header += [f"gp_h{h}_init{i}" for i in range(n_inits)]
    header.append("gp_lpc")
    rows = []
    for row in frame_rows:
        out: list = [row["frame_index"]]
        for h in hidden_sizes:
            out += list(row["gp_by_hidden"][h])
        out.append(row["gp_lpc_db"])
        rows.append(out)
    return header, rows


def format_value(v) -> str:
    """Fixed CSV formatting: floats at 6 significant digits."""
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".6g")
    return str(v)


def write_csv(path, header: list[str], rows: list[list]) -> None:
    """Write rows with a mandatory header; all formatting goes through format_value."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
