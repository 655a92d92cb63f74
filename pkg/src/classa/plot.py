"""Standalone SVG: curve with control polygon (left), curvature over t (right)."""

from __future__ import annotations

import numpy as np

WIDTH, HEIGHT = 800, 400
PANEL = 400
MARGIN = 0.05


def _fit(xs: np.ndarray, ys: np.ndarray, x0: float, equal_aspect: bool):
    """Affine map of data into the panel starting at ``x0`` with 5% margins."""
    lo = np.array([xs.min(), ys.min()])
    hi = np.array([xs.max(), ys.max()])
    span = hi - lo
    # flat data still needs a nonzero extent
    span = np.where(span > 0, span, np.maximum(np.abs(hi), 1.0))
    lo = np.where(hi - lo > 0, lo, lo - 0.5 * span)
    inner = PANEL * (1 - 2 * MARGIN)
    sx, sy = inner / span
    if equal_aspect:
        sx = sy = min(sx, sy)
    off_x = x0 + PANEL * MARGIN + 0.5 * (inner - sx * span[0])
    off_y = PANEL * MARGIN + 0.5 * (inner - sy * span[1])

    def to_px(x, y):
        return off_x + sx * (np.asarray(x) - lo[0]), HEIGHT - (off_y + sy * (np.asarray(y) - lo[1]))

    return to_px


def _path(px: np.ndarray, py: np.ndarray) -> str:
    pts = [f"{x:.3f},{y:.3f}" for x, y in zip(px, py)]
    return "M" + " L".join(pts)


def _points(px, py) -> str:
    return " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(px, py))


def render_svg(points: np.ndarray, polygon: np.ndarray, ts: np.ndarray, kappa: np.ndarray, title: str = "") -> str:
    """SVG text for sampled curve ``points`` (k, 2), ``polygon`` (n+1, 2) and curvature."""
    allx = np.concatenate([points[:, 0], polygon[:, 0]])
    ally = np.concatenate([points[:, 1], polygon[:, 1]])
    curve_px = _fit(allx, ally, 0.0, equal_aspect=True)
    k_px = _fit(ts, kappa, PANEL, equal_aspect=False)

    cx, cy = curve_px(points[:, 0], points[:, 1])
    qx, qy = curve_px(polygon[:, 0], polygon[:, 1])
    kx, ky = k_px(ts, kappa)
    zx, zy = k_px(np.array([0.0, 1.0]), np.zeros(2))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{PANEL}" y1="0" x2="{PANEL}" y2="{HEIGHT}" stroke="#cccccc"/>',
        f'<polyline points="{_points(qx, qy)}" fill="none" stroke="#888888" stroke-dasharray="4 3"/>',
    ]
    parts += [f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2.5" fill="#888888"/>' for x, y in zip(qx, qy)]
    parts += [
        f'<path d="{_path(cx, cy)}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>',
        f'<line x1="{zx[0]:.3f}" y1="{zy[0]:.3f}" x2="{zx[1]:.3f}" y2="{zy[1]:.3f}" stroke="#cccccc"/>',
        f'<path d="{_path(kx, ky)}" fill="none" stroke="#b22222" stroke-width="1.5"/>',
    ]
    if title:
        safe = title.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        parts.append(f'<text x="8" y="16" font-size="12" font-family="monospace">{safe}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
