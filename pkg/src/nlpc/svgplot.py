"""Minimal SVG line/scatter emitter for quick looks at the figure CSVs.

Deliberately tiny: fixed canvas, linear axes, one polyline or point cloud
per series.  Anything fancier belongs in an external plotting tool.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

WIDTH, HEIGHT = 640, 420
MARGIN = 50
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"]


def _finite_limits(arrays) -> tuple[float, float]:
    values = np.concatenate([np.asarray(a, dtype=float).ravel() for a in arrays])
    values = values[np.isfinite(values)]
    if len(values) == 0:
        return 0.0, 1.0
    lo, hi = float(values.min()), float(values.max())
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


class _Canvas:
    def __init__(self, title, xlabel, ylabel, xlim, ylim):
        self.xlim, self.ylim = xlim, ylim
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}">',
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
            f'<text x="{WIDTH / 2}" y="{HEIGHT - 8}" text-anchor="middle" font-size="12">{xlabel}</text>',
            f'<text x="14" y="{HEIGHT / 2}" text-anchor="middle" font-size="12" '
            f'transform="rotate(-90 14 {HEIGHT / 2})">{ylabel}</text>',
            f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
            f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="black"/>',
        ]
        self._ticks()

    def x_px(self, x: float) -> float:
        lo, hi = self.xlim
        return MARGIN + (x - lo) / (hi - lo) * (WIDTH - 2 * MARGIN)

    def y_px(self, y: float) -> float:
        lo, hi = self.ylim
        return HEIGHT - MARGIN - (y - lo) / (hi - lo) * (HEIGHT - 2 * MARGIN)

    def _ticks(self, n: int = 5):
        for i in range(n):
            fx = self.xlim[0] + i * (self.xlim[1] - self.xlim[0]) / (n - 1)
            fy = self.ylim[0] + i * (self.ylim[1] - self.ylim[0]) / (n - 1)
            px, py = self.x_px(fx), self.y_px(fy)
            self.parts.append(
                f'<text x="{px:.1f}" y="{HEIGHT - MARGIN + 16}" text-anchor="middle" '
                f'font-size="10">{fx:.3g}</text>'
            )
            self.parts.append(
                f'<text x="{MARGIN - 6}" y="{py + 3:.1f}" text-anchor="end" '
                f'font-size="10">{fy:.3g}</text>'
            )

    def legend(self, names):
        for i, name in enumerate(names):
            color = PALETTE[i % len(PALETTE)]
            y = MARGIN + 14 + 14 * i
            self.parts.append(
                f'<line x1="{WIDTH - MARGIN - 110}" y1="{y}" x2="{WIDTH - MARGIN - 90}" '
                f'y2="{y}" stroke="{color}" stroke-width="2"/>'
            )
            self.parts.append(
                f'<text x="{WIDTH - MARGIN - 84}" y="{y + 4}" font-size="11">{name}</text>'
            )

    def save(self, path):
        self.parts.append("</svg>")
        Path(path).write_text("\n".join(self.parts))


def _clean(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    keep = np.isfinite(x) & np.isfinite(y)
    return x[keep], y[keep]


def write_line_svg(path, x, series: dict[str, np.ndarray], title="", xlabel="", ylabel="") -> None:
    """One polyline per named series over a shared x axis."""
    xlim = _finite_limits([x])
    ylim = _finite_limits(list(series.values()))
    canvas = _Canvas(title, xlabel, ylabel, xlim, ylim)
    for i, (name, ys) in enumerate(series.items()):
        xs, yv = _clean(x, ys)
        if len(xs) == 0:
            continue
        pts = " ".join(f"{canvas.x_px(a):.1f},{canvas.y_px(b):.1f}" for a, b in zip(xs, yv))
        canvas.parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{PALETTE[i % len(PALETTE)]}" '
            f'stroke-width="1.5"/>'
        )
    canvas.legend(series.keys())
    canvas.save(path)


def write_scatter_svg(path, x, y, title="", xlabel="", ylabel="", diagonal=False, fit=None) -> None:
    """Point cloud with optional y=x line and (slope, intercept) fit line."""
    xs, ys = _clean(x, y)
    xlim = _finite_limits([xs])
    ylim = _finite_limits([ys])
    canvas = _Canvas(title, xlabel, ylabel, xlim, ylim)
    for a, b in zip(xs, ys):
        canvas.parts.append(
            f'<circle cx="{canvas.x_px(a):.1f}" cy="{canvas.y_px(b):.1f}" r="2.5" '
            f'fill="{PALETTE[0]}" fill-opacity="0.7"/>'
        )
    lines = []
    if diagonal:
        lines.append((1.0, 0.0, "#888888", "4 3"))
    if fit is not None and all(math.isfinite(v) for v in fit):
        lines.append((fit[0], fit[1], PALETTE[1], "6 3"))
    for slope, intercept, color, dash in lines:
        x0, x1 = xlim
        canvas.parts.append(
            f'<line x1="{canvas.x_px(x0):.1f}" y1="{canvas.y_px(slope * x0 + intercept):.1f}" '
            f'x2="{canvas.x_px(x1):.1f}" y2="{canvas.y_px(slope * x1 + intercept):.1f}" '
            f'stroke="{color}" stroke-dasharray="{dash}"/>'
        )
    canvas.save(path)
