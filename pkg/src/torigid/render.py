"""Deterministic SVG pictures of rank-2 fans.

Rays are segments from the origin to a scaled unit circle, 2-dimensional
cones become shaded sectors.  Colors are assigned by the canonical index
of each sector and all coordinates are formatted with fixed precision, so
the output bytes depend only on the fan.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .fans import Fan

PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
           "#edc949", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac")


def _endpoint(v, cx: float, cy: float, radius: float) -> tuple[str, str]:
    norm = math.hypot(v[0], v[1])
    x = cx + v[0] / norm * radius
    y = cy - v[1] / norm * radius
    return f"{x:.2f}", f"{y:.2f}"


def render_fan_svg(fan: Fan, canvas: int = 512, margin: int = 24) -> str:
    """Render a rank-2 fan; byte-identical output for equal inputs."""
    if fan.rank != 2:
        raise DomainError("only rank-2 fans can be rendered")
    cx = cy = canvas / 2.0
    radius = canvas / 2.0 - margin
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas}" height="{canvas}" '
        f'viewBox="0 0 {canvas} {canvas}">',
        f'<rect width="{canvas}" height="{canvas}" fill="#ffffff"/>',
    ]
    sectors = sorted((fan.cones[i] for i in fan.ids_of_dim(2)),
                     key=lambda c: c.sort_key())
    for idx, cone in enumerate(sectors):
        a, b = cone.rays
        if a[0] * b[1] - a[1] * b[0] < 0:
            a, b = b, a
        ax, ay = _endpoint(a, cx, cy, radius)
        bx, by = _endpoint(b, cx, cy, radius)
        color = PALETTE[idx % len(PALETTE)]
        lines.append(
            f'<path d="M {cx:.2f} {cy:.2f} L {ax} {ay} '
            f'A {radius:.2f} {radius:.2f} 0 0 0 {bx} {by} Z" '
            f'fill="{color}" fill-opacity="0.35"/>')
    rays = sorted({r for c in fan.cones.values() for r in c.rays})
    for v in rays:
        ex, ey = _endpoint(v, cx, cy, radius)
        lines.append(
            f'<line x1="{cx:.2f}" y1="{cy:.2f}" x2="{ex}" y2="{ey}" '
            f'stroke="#333333" stroke-width="2"/>')
    lines.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
