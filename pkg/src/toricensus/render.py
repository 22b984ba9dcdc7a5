"""Static SVG rendering of Delzant polygons.

Rendering is presentation only: coordinates are converted to floats at
the last moment, and the output bytes are deterministic for identical
inputs (fixed canvas, fixed hash salt, no timestamps).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "toricensus"

import matplotlib.pyplot as plt

from .lattice import format_rational
from .polygon import DelzantPolygon

_FILL = "#dce7f5"
_EDGE = "#2b5a8c"


def emit_svg(p: DelzantPolygon, path, title: str | None = None) -> None:
    """Write an SVG of the polygon with (k_j, a_j) edge labels."""
    xs = [float(v[0]) for v in p.vertices]
    ys = [float(v[1]) for v in p.vertices]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y)
    cx, cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2
    half = span * 0.62

    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    ax.fill(xs, ys, facecolor=_FILL, edgecolor=_EDGE, linewidth=1.4, zorder=1)
    ax.plot(xs + xs[:1], ys + ys[:1], marker="o", markersize=3.5, color=_EDGE, linewidth=0, zorder=2)

    profile = p.profile
    n = p.n
    for j in range(n):
        a, b = p.vertices[j], p.vertices[(j + 1) % n]
        mx, my = (float(a[0] + b[0]) / 2, float(a[1] + b[1]) / 2)
        ux, uy = p.inward_normals[j]
        norm = (ux * ux + uy * uy) ** 0.5
        off = 0.05 * span
        k, size = profile[j]
        ax.annotate(
            f"({k}, {format_rational(size)})",
            (mx + off * ux / norm, my + off * uy / norm),
            ha="center",
            va="center",
            fontsize=8,
            color="#1a3a5c",
        )

    ax.set_xlim(cx - half, cx + half)
    ax.set_ylim(cy - half, cy + half)
    ax.set_aspect("equal")
    ax.grid(True, linestyle=":", linewidth=0.5, alpha=0.5)
    if title:
        ax.set_title(title, fontsize=10)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def render_census_classes(classes, out_dir) -> list[str]:
    """Write class-000.svg, class-001.svg, ... in canonical order."""
    import os

    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for i, cls in enumerate(classes):
        name = f"class-{i:03d}.svg"
        target = os.path.join(out_dir, name)
        emit_svg(cls.representative, target, title=f"class {i} (seed l={cls.seed_ell})")
        paths.append(target)
    return paths
