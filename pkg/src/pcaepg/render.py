"""SVG drawing of a path representation.

Paths that share a grid line are nudged sideways by a small per-vertex
offset so overlapping segments stay visible.  The offsets are cosmetic;
adjacency is always read off the unshifted model.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .epg import EpgRepresentation

CELL = 40
MARGIN = 30
_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


def _offset(v: int, n: int) -> float:
    # spread vertices symmetrically inside a third of a cell
    if n <= 1:
        return 0.0
    span = CELL / 3
    return -span / 2 + span * v / (n - 1)


def render_svg(rep: EpgRepresentation, labels: list[str] | None = None) -> str:
    pts = [p for path in rep.paths for p in path.points]
    r0 = min(r for r, _ in pts)
    c0 = min(c for _, c in pts)
    rows = max(r for r, _ in pts) - r0
    cols = max(c for _, c in pts) - c0
    width = cols * CELL + 2 * MARGIN
    height = rows * CELL + 2 * MARGIN
    labels = labels or [str(v) for v in range(rep.n)]

    def xy(r: int, c: int, d: float) -> tuple[float, float]:
        return (MARGIN + (c - c0) * CELL + d, MARGIN + (r - r0) * CELL + d)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for r in range(rows + 1):
        y = MARGIN + r * CELL
        out.append(f'<line x1="{MARGIN}" y1="{y}" x2="{MARGIN + cols * CELL}" y2="{y}"/>')
    for c in range(cols + 1):
        x = MARGIN + c * CELL
        out.append(f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{MARGIN + rows * CELL}"/>')
    out.append("</g>")
    for v, path in enumerate(rep.paths):
        d = _offset(v, rep.n)
        coords = " ".join(f"{x:.1f},{y:.1f}" for x, y in (xy(r, c, d) for r, c in path.points))
        colour = _PALETTE[v % len(_PALETTE)]
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="{colour}" stroke-width="3" '
            f'stroke-linecap="round" stroke-linejoin="round"><title>{escape(labels[v])}</title></polyline>'
        )
        lx, ly = xy(*path.points[0], d)
        out.append(
            f'<text x="{lx - 6:.1f}" y="{ly - 6:.1f}" font-size="11" fill="{colour}">{escape(labels[v])}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
