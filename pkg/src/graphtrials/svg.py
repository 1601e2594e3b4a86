"""Deterministic SVG rendering of certificates."""

from __future__ import annotations

from .layout import BookLayout, MatrixLayout, NodeLinkLayout
from .trial import Certificate

HIGHLIGHT = "#D62728"
BASE = "#888888"
CELL = "#999999"

_PAD = 30.0
_SIZE = 600.0


def _f(x: float) -> str:
    return f"{x:.2f}"


def _render_nodelink(g, lay: NodeLinkLayout) -> str:
    xs = [p[0] for p in lay.positions]
    ys = [p[1] for p in lay.positions]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    s = _SIZE / span

    def pt(v):
        x, y = lay.positions[v]
        return (_PAD + (x - lo_x) * s, _PAD + (hi_y - y) * s)

    w = _PAD * 2 + (hi_x - lo_x) * s
    h = _PAD * 2 + (hi_y - lo_y) * s
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
        f'viewBox="0 0 {_f(w)} {_f(h)}">'
    ]
    base_edges = sorted(lay.drawn_edges - lay.highlight_edges)
    for u, v in base_edges:
        (x1, y1), (x2, y2) = pt(u), pt(v)
        out.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{BASE}" stroke-width="1"/>'
        )
    for u, v in sorted(lay.highlight_edges):
        (x1, y1), (x2, y2) = pt(u), pt(v)
        out.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{HIGHLIGHT}" stroke-width="3"/>'
        )
    for v in range(len(lay.positions)):
        x, y = pt(v)
        fill = HIGHLIGHT if v in lay.highlight_vertices else "#FFFFFF"
        out.append(
            f'<circle cx="{_f(x)}" cy="{_f(y)}" r="5" fill="{fill}" '
            f'stroke="{BASE}" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _render_matrix(g, lay: MatrixLayout) -> str:
    n = g.n
    unit = 14.0
    offs = [0.0]
    for wd in lay.row_widths:
        offs.append(offs[-1] + wd * unit)
    total = offs[-1]
    w = h = _PAD * 2 + total
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
        f'viewBox="0 0 {_f(w)} {_f(h)}">'
    ]
    ev_marks = {(i, j) for i, j, cls in lay.marked_cells if cls == "evidence"}
    bb_marks = {(i, j) for i, j, cls in lay.marked_cells if cls == "block-boundary"}
    out.append(
        f'<rect x="{_f(_PAD)}" y="{_f(_PAD)}" width="{_f(total)}" height="{_f(total)}" '
        f'fill="none" stroke="{BASE}" stroke-width="1"/>'
    )
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x = _PAD + offs[j]
            y = _PAD + offs[i]
            cw = offs[j + 1] - offs[j]
            ch = offs[i + 1] - offs[i]
            if (i, j) in ev_marks:
                fill = HIGHLIGHT
            elif g.has_edge(lay.order[i], lay.order[j]):
                fill = CELL
            else:
                continue
            out.append(
                f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(cw)}" '
                f'height="{_f(ch)}" fill="{fill}"/>'
            )
    for i, j in sorted(bb_marks):
        x = _PAD + offs[j]
        y = _PAD + offs[i]
        cw = offs[j + 1] - offs[j]
        ch = offs[i + 1] - offs[i]
        out.append(
            f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(cw)}" height="{_f(ch)}" '
            f'fill="none" stroke="{HIGHLIGHT}" stroke-width="2" '
            f'stroke-dasharray="4 2"/>'
        )
    for lo, hi in lay.block_bounds:
        x = _PAD + offs[lo]
        side = offs[hi] - offs[lo]
        out.append(
            f'<rect x="{_f(x)}" y="{_f(x)}" width="{_f(side)}" height="{_f(side)}" '
            f'fill="none" stroke="#555555" stroke-width="1.5" '
            f'stroke-dasharray="6 3"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _render_book(g, lay: BookLayout) -> str:
    n = len(lay.spine)
    gap = 40.0
    panel_h = gap * n / 2 + 60.0
    width = _PAD * 2 + gap * max(n - 1, 1)
    height = _PAD + panel_h * lay.k
    pos = {v: i for i, v in enumerate(lay.spine)}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" '
        f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">'
    ]
    for page in range(lay.k):
        base_y = _PAD + panel_h * (page + 1) - 40.0
        x0, x1 = _PAD, _PAD + gap * max(n - 1, 1)
        out.append(
            f'<line x1="{_f(x0)}" y1="{_f(base_y)}" x2="{_f(x1)}" y2="{_f(base_y)}" '
            f'stroke="{BASE}" stroke-width="1"/>'
        )
        for (u, v), p in sorted(lay.pages.items()):
            if p != page:
                continue
            a = _PAD + gap * min(pos[u], pos[v])
            b = _PAD + gap * max(pos[u], pos[v])
            r = (b - a) / 2
            out.append(
                f'<path d="M {_f(a)} {_f(base_y)} A {_f(r)} {_f(r)} 0 0 1 '
                f'{_f(b)} {_f(base_y)}" fill="none" stroke="{HIGHLIGHT}" '
                f'stroke-width="2"/>'
            )
        for i in range(n):
            x = _PAD + gap * i
            out.append(
                f'<circle cx="{_f(x)}" cy="{_f(base_y)}" r="4" fill="#FFFFFF" '
                f'stroke="{BASE}" stroke-width="1"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(c: Certificate) -> str:
    lay = c.layout
    if isinstance(lay, NodeLinkLayout):
        return _render_nodelink(c.graph, lay)
    if isinstance(lay, MatrixLayout):
        return _render_matrix(c.graph, lay)
    if isinstance(lay, BookLayout):
        return _render_book(c.graph, lay)
    raise ValueError(f"cannot render layout type {type(lay).__name__}")
