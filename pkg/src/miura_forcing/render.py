"""ASCII and SVG drawings of (partial) Miura-ori crease patterns."""
from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .core import CreaseId, MOUNTAIN, VALLEY, PartialMVAssignment

_SYMBOL = {MOUNTAIN: "M", VALLEY: "V", None: "?"}


@dataclass(frozen=True)
class RenderConfig:
    """Drawing parameters; ``alpha`` is the acute cell angle in degrees."""

    alpha: float = 80.0
    cell_width: float = 40.0
    cell_height: float = 30.0
    margin: float = 10.0
    mountain_color: str = "#d62728"
    valley_color: str = "#2ca02c"
    valley_dash: str = "6 4"
    neutral_color: str = "#999999"
    stroke_width: float = 2.0

    def __post_init__(self):
        if not 0 < self.alpha < 90:
            raise ValueError(f"alpha must lie strictly between 0 and 90 degrees, got {self.alpha}")
        if self.cell_width <= 0 or self.cell_height <= 0:
            raise ValueError("cell dimensions must be positive")


def render_ascii(a: PartialMVAssignment) -> str:
    """2m - 1 lines: even lines show cells ('.') and zig-zag creases, odd lines
    show horizontal creases with '+' at nodes."""
    m, n = a.size
    lines = []
    for r in range(m):
        row = []
        for c in range(n):
            row.append(".")
            if c < n - 1:
                row.append(_SYMBOL[a.get(CreaseId("V", r, c))])
        lines.append("".join(row))
        if r < m - 1:
            row = []
            for c in range(n):
                row.append(_SYMBOL[a.get(CreaseId("H", r, c))])
                if c < n - 1:
                    row.append("+")
            lines.append("".join(row))
    return "\n".join(lines) + "\n"


def _style(mv, cfg: RenderConfig) -> str:
    if mv == MOUNTAIN:
        return f'class="mountain" stroke="{cfg.mountain_color}" stroke-width="{cfg.stroke_width:g}"'
    if mv == VALLEY:
        return (
            f'class="valley" stroke="{cfg.valley_color}" stroke-width="{cfg.stroke_width:g}" '
            f'stroke-dasharray="{cfg.valley_dash}"'
        )
    return f'class="unassigned" stroke="{cfg.neutral_color}" stroke-width="{cfg.stroke_width / 4:g}"'


def render_svg(a: PartialMVAssignment, cfg: RenderConfig = RenderConfig()) -> str:
    """SVG 1.1 drawing of the parallelogram mesh.

    Horizontal line i sits at height i * h and is shifted right by h / tan(alpha)
    on even lines, so each zig-zag line bends at every node and neighbouring
    strips are mirror images.  Each zig-zag line is a ``<g class="zigzag">``
    holding one polyline per maximal run of equally assigned creases.
    """
    m, n = a.size
    w, h = cfg.cell_width, cfg.cell_height
    shift = h / math.tan(math.radians(cfg.alpha))

    def pt(i: int, j: int) -> tuple[float, float]:
        x = cfg.margin + j * w + ((i + 1) % 2) * shift
        return round(x, 3), round(cfg.margin + i * h, 3)

    def fmt(points) -> str:
        return " ".join(f"{x:g},{y:g}" for x, y in points)

    width = 2 * cfg.margin + n * w + shift
    height = 2 * cfg.margin + m * h
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
    ]
    border = [pt(0, j) for j in range(n + 1)]
    border += [pt(i, n) for i in range(1, m + 1)]
    border += [pt(m, j) for j in range(n - 1, -1, -1)]
    border += [pt(i, 0) for i in range(m - 1, 0, -1)]
    out.append(f'<polygon class="border" points="{fmt(border)}" fill="none" stroke="black" stroke-width="1"/>')

    for j in range(1, n):
        out.append(f'<g class="zigzag" data-line={quoteattr(str(j))}>')
        r = 0
        while r < m:
            mv = a.get(CreaseId("V", r, j - 1))
            end = r
            while end + 1 < m and a.get(CreaseId("V", end + 1, j - 1)) == mv:
                end += 1
            pts = [pt(i, j) for i in range(r, end + 2)]
            out.append(f'<polyline points="{fmt(pts)}" fill="none" {_style(mv, cfg)}/>')
            r = end + 1
        out.append("</g>")

    for i in range(1, m):
        out.append(f'<g class="horizontal" data-line={quoteattr(str(i))}>')
        for c in range(n):
            (x1, y1), (x2, y2) = pt(i, c), pt(i, c + 1)
            mv = a.get(CreaseId("H", i - 1, c))
            out.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" {_style(mv, cfg)}/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
