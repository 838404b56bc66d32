from __future__ import annotations

import math

from ..matchings.matching import Matching

STYLES = ("linear", "circular")

STEP = 40.0
MARGIN = 30.0
RADIUS = 4.0
CIRCLE = 150.0
FONT_SIZE = 12


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def _header(width: float, height: float) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]


def _vertices(points: list[tuple[float, float]], m: Matching, labels: bool, offset: tuple[float, float]) -> list[str]:
    lines = ['<g fill="black" stroke="none">']
    for x, y in points:
        lines.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(RADIUS)}"/>')
    lines.append("</g>")
    if labels:
        lines.append(f'<g font-family="monospace" font-size="{FONT_SIZE}" text-anchor="middle">')
        dx, dy = offset
        for (x, y), value in zip(points, m.seq):
            lines.append(f'<text x="{_fmt(x + dx)}" y="{_fmt(y + dy)}">{value}</text>')
        lines.append("</g>")
    return lines


def render_linear(m: Matching, labels: bool = True) -> str:
    size = len(m.seq)
    width = 2 * MARGIN + max(size - 1, 0) * STEP
    # Room above the baseline for an arc spanning all of it.
    height = 2 * MARGIN + max(size - 1, 1) * STEP / 2 + FONT_SIZE
    base = height - MARGIN - FONT_SIZE
    points = [(MARGIN + i * STEP, base) for i in range(size)]

    lines = _header(width, height)
    for e in m.edges:
        x1, x2 = points[e.left - 1][0], points[e.right - 1][0]
        r = (x2 - x1) / 2
        lines.append(f'<path class="edge" d="M {_fmt(x1)} {_fmt(base)} A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x2)} {_fmt(base)}"/>')
    lines.append("</g>")
    lines.extend(_vertices(points, m, labels, (0.0, FONT_SIZE + RADIUS)))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_circular(m: Matching, labels: bool = True) -> str:
    size = len(m.seq)
    side = 2 * (CIRCLE + MARGIN)
    cx = cy = side / 2
    # Vertex 1 at the top, increasing clockwise.
    points = [
        (cx + CIRCLE * math.sin(2 * math.pi * i / size), cy - CIRCLE * math.cos(2 * math.pi * i / size))
        for i in range(size)
    ]

    lines = _header(side, side)
    lines.append(f'<circle class="outline" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(CIRCLE)}" stroke="gray"/>')
    for e in m.edges:
        (x1, y1), (x2, y2) = points[e.left - 1], points[e.right - 1]
        lines.append(f'<path class="edge" d="M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cx)} {_fmt(cy)} {_fmt(x2)} {_fmt(y2)}"/>')
    lines.append("</g>")
    lines.extend(_vertices(points, m, labels, (0.0, -2 * RADIUS)))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(m: Matching, style: str = "linear", labels: bool = True) -> str:
    if style == "linear":
        return render_linear(m, labels)
    if style == "circular":
        return render_circular(m, labels)
    raise ValueError(f"Unknown style {style!r}, expected one of {', '.join(STYLES)}")
