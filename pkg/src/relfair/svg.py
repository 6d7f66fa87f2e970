"""Two-person SVG pictures of a problem and its choice set.

Generator boxes are gray, chosen pieces and corners red, the KS point
blue. The view box spans [0, b(X)] plus a 10% margin. Output is a pure
function of its inputs, so the bytes are reproducible.
"""
from __future__ import annotations

from math import atan2

from ._rat import fmt_rat
from .errors import DimensionMismatch
from .geometry import Problem, ideal_point
from .polyhedra import vertices
from .rules import Rule, solve

SIZE = 400
GRAY, RED, BLUE = "#9e9e9e", "#d62728", "#1f77b4"


def _num(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _ordered(points):
    """Polygon vertices in counterclockwise order around their centroid."""
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    return sorted(points, key=lambda p: (atan2(p[1] - cy, p[0] - cx), p))


def render_svg(rule: Rule, X: Problem) -> str:
    if X.n != 2:
        raise DimensionMismatch("plots are only available for n = 2")
    b = ideal_point(X)
    span = float(max(b))
    margin = 0.1 * span
    scale = SIZE / (span + 2 * margin)

    def px(p):
        return (float(p[0]) + margin) * scale, (span + margin - float(p[1])) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{rule.label} on {X!r}</title>",
    ]
    ox, oy = px((0, 0))
    ex, _ = px((span + margin / 2, 0))
    _, ey = px((0, span + margin / 2))
    out.append(f'<line x1="{_num(ox)}" y1="{_num(oy)}" x2="{_num(ex)}" y2="{_num(oy)}" stroke="black"/>')
    out.append(f'<line x1="{_num(ox)}" y1="{_num(oy)}" x2="{_num(ox)}" y2="{_num(ey)}" stroke="black"/>')
    for g in X.generators:
        x0, y0 = px((0, g[1]))
        x1, y1 = px((g[0], 0))
        out.append(
            f'<rect x="{_num(x0)}" y="{_num(y0)}" width="{_num(x1 - x0)}" height="{_num(y1 - y0)}" '
            f'fill="{GRAY}" fill-opacity="0.35" stroke="{GRAY}"/>'
        )
    bx, by = px(b)
    out.append(f'<circle cx="{_num(bx)}" cy="{_num(by)}" r="3" fill="none" stroke="black"/>')
    out.append(f'<text x="{_num(bx + 5)}" y="{_num(by - 5)}" font-size="10">b({fmt_rat(b[0])},{fmt_rat(b[1])})</text>')

    cs = solve(rule, X)
    color = BLUE if rule.kind == "ks" else RED
    pieces = cs.pieces if cs.pieces is not None else ()
    for P in pieces:
        vs = [tuple(float(c) for c in v) for v in vertices(P)]
        if len(vs) >= 3:
            pts = " ".join(f"{_num(a)},{_num(c)}" for a, c in (px(v) for v in _ordered(vs)))
            out.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="0.5" stroke="{color}"/>')
        elif len(vs) == 2:
            (x0, y0), (x1, y1) = px(vs[0]), px(vs[1])
            out.append(
                f'<line x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x1)}" y2="{_num(y1)}" '
                f'stroke="{color}" stroke-width="3"/>'
            )
    for w in cs.witnesses:
        wx, wy = px(w)
        out.append(f'<circle cx="{_num(wx)}" cy="{_num(wy)}" r="4" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
