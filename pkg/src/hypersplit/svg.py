"""Minimal SVG rendering of subdivisions of planar point configurations."""

import math

from .engine import hull_vertices

PALETTE = ("#8ecae6", "#ffb703", "#90be6d", "#f28482", "#cdb4db", "#a3c4f3", "#ffd6a5")


def _hull_order(pts):
    cx = sum(x for x, _ in pts) / len(pts)
    cy = sum(y for _, y in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def render(sub, size=320, margin=24):
    """SVG text drawing each cell as a polygon and every point as a dot.

    Points that lie in no cell are drawn hollow.
    """
    if sub.config.ambient_dim != 2:
        raise ValueError("SVG output needs a 2-dimensional configuration")
    pts = [(float(x), float(y)) for x, y in sub.config.points]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / span

    def tr(p):
        return (margin + (p[0] - min(xs)) * scale, size - margin - (p[1] - min(ys)) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    for c, cell in enumerate(sub.cells):
        poly = _hull_order([pts[i] for i in sorted(hull_vertices(sub.config, cell))])
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(tr, poly))
        color = PALETTE[c % len(PALETTE)]
        lines.append(
            f'  <polygon points="{coords}" fill="{color}" fill-opacity="0.6" '
            f'stroke="#222" stroke-width="1.5"/>'
        )
    used = sub.used_points
    for i, p in enumerate(pts):
        x, y = tr(p)
        fill = "#222" if i in used else "none"
        lines.append(
            f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{fill}" stroke="#222"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
