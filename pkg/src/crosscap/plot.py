"""SVG graph of a piecewise-linear function, labelled with exact rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .core import PiecewiseLinear, format_fraction, pl_eval

WIDTH, HEIGHT, MARGIN = 640, 400, 60


def _w_end(f: PiecewiseLinear) -> Fraction:
    last = f.breakpoints[-1][0] if f.breakpoints else f.domain_start
    return max(last + 2, f.domain_start + 2)


def render_svg(f: PiecewiseLinear, title: str = "", w_end: Optional[Fraction] = None) -> str:
    """Draw ``f`` on ``[domain_start, w_end]`` with axes ``w`` and ``X``.

    Tick labels sit at the breakpoints and carry their exact values.
    Pixel coordinates are the only place rationals get rounded.
    """
    lo = f.domain_start
    hi = Fraction(w_end) if w_end is not None else _w_end(f)
    points = [(lo, pl_eval(f, lo))]
    points += [(w, v) for w, v in f.breakpoints if lo < w < hi]
    points.append((hi, pl_eval(f, hi)))
    ys = [v for _, v in points]
    y_lo, y_hi = min(min(ys), 0), max(ys)
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def px(w):
        return MARGIN + float((w - lo) / (hi - lo)) * (WIDTH - 2 * MARGIN)

    def py(v):
        return HEIGHT - MARGIN - float((v - y_lo) / (y_hi - y_lo)) * (HEIGHT - 2 * MARGIN)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.2f}" y="20" text-anchor="middle">{escape(title)}</text>')
    x0, y0 = px(lo), py(y_lo)
    out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{WIDTH - MARGIN:.2f}" y2="{y0:.2f}" stroke="black"/>')
    out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x0:.2f}" y2="{MARGIN:.2f}" stroke="black"/>')
    out.append(f'<text x="{WIDTH - MARGIN + 10:.2f}" y="{y0 + 4:.2f}">w</text>')
    out.append(f'<text x="{x0 - 4:.2f}" y="{MARGIN - 10:.2f}" text-anchor="middle">X</text>')
    for w, v in points[:-1]:
        x, y = px(w), py(v)
        out.append(f'<line x1="{x:.2f}" y1="{y0:.2f}" x2="{x:.2f}" y2="{y0 + 5:.2f}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{y0 + 18:.2f}" text-anchor="middle">{format_fraction(w)}</text>')
        out.append(f'<line x1="{x0 - 5:.2f}" y1="{y:.2f}" x2="{x0:.2f}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{x0 - 8:.2f}" y="{y + 4:.2f}" text-anchor="end">{format_fraction(v)}</text>')
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="steelblue"/>')
    poly = " ".join(f"{px(w):.2f},{py(v):.2f}" for w, v in points)
    out.append(f'<polyline points="{poly}" fill="none" stroke="steelblue" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
