"""ASCII and SVG drawings of tableaux, pistols and Dellac configurations.

Tableaux are drawn in physical layout: row 1 at the bottom, column 1 at
the left.  Free dots are drawn as stars.  Pistols are drawn on their
staircase with a cross for even positions that are not doubled fixed points.
"""

from __future__ import annotations

from typing import Mapping
from xml.sax.saxutils import escape

from .core import DellacConfig, SurjectivePistol, SymplecticConfig, Tableau, doubled_fixed_points, rho

CELL = 28


def _label_text(labels, T: Tableau, p: int) -> str | None:
    if labels is None:
        return None
    return str(labels[rho(T.n, p)])


def tableau_ascii(T: Tableau, labels: Mapping | None = None) -> str:
    """Grid with ``*`` for free dots, ``o`` for other dots, ``.`` for empty boxes.

    Boxes strictly below the diagonal are blank.  Each row is prefixed by its
    physical index and, in parentheses, its logical name.  ``labels``
    (logical row -> label) replaces the dot glyphs when given.
    """
    n = T.n
    w = 4 if labels is not None else 2
    lines = []
    for p in range(2 * n, 0, -1):
        cells = []
        for c in range(1, n + 1):
            if c > p:
                glyph = ""
            elif T.phys_col[p - 1] == c:
                glyph = _label_text(labels, T, p) or ("*" if T.is_free(p) else "o")
            else:
                glyph = "."
            cells.append(glyph.rjust(w))
        lines.append(f"{p:>3} ({rho(n, p):>2}) " + "".join(cells))
    lines.append(" " * 9 + "".join(str(c).rjust(w) for c in range(1, n + 1)))
    return "\n".join(lines)


def pistol_ascii(f: SurjectivePistol) -> str:
    n = f.n
    dfp = doubled_fixed_points(f)
    lines = []
    for k in range(n, 0, -1):
        row = []
        for j in range(1, 2 * n + 1):
            if 2 * k < j:
                row.append("  ")
            elif f(j) == 2 * k:
                row.append(" x" if j % 2 == 0 and f(j) not in dfp else " o")
            else:
                row.append(" .")
        lines.append(f"{2 * k:>3} " + "".join(row))
    lines.append("    " + "".join(f"{j:>2}" for j in range(1, 2 * n + 1)))
    return "\n".join(lines)


def dellac_ascii(D: DellacConfig | SymplecticConfig) -> str:
    if isinstance(D, SymplecticConfig):
        D = D.base
    n = D.n
    lines = []
    for i in range(2 * n, 0, -1):
        cells = []
        for c in range(1, n + 1):
            if not c <= i <= c + n:
                cells.append("  ")
            else:
                cells.append(" o" if D.row_col[i - 1] == c else " .")
        lines.append(f"{i:>3} " + "".join(cells))
    lines.append("    " + "".join(f"{c:>2}" for c in range(1, n + 1)))
    return "\n".join(lines)


# SVG -------------------------------------------------------------------


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _grid(cols: int, rows: int, ox: int, oy: int) -> list[str]:
    out = []
    for c in range(cols + 1):
        x = ox + c * CELL
        out.append(f'<line x1="{x}" y1="{oy}" x2="{x}" y2="{oy + rows * CELL}" stroke="#999"/>')
    for r in range(rows + 1):
        y = oy + r * CELL
        out.append(f'<line x1="{ox}" y1="{y}" x2="{ox + cols * CELL}" y2="{y}" stroke="#999"/>')
    return out


def _star(cx: float, cy: float, r: float) -> str:
    from math import cos, pi, sin

    pts = []
    for k in range(10):
        rad = r if k % 2 == 0 else r * 0.45
        a = -pi / 2 + k * pi / 5
        pts.append(f"{cx + rad * cos(a):.1f},{cy + rad * sin(a):.1f}")
    return f'<polygon points="{" ".join(pts)}" fill="black"/>'


def tableau_svg(T: Tableau, labels: Mapping | None = None) -> str:
    n = T.n
    ox, oy = 40, 10
    rows = 2 * n
    H = oy + rows * CELL

    def xy(c: float, p: float) -> tuple[float, float]:
        return ox + c * CELL, H - p * CELL

    body = _grid(n, rows, ox, oy)
    x0, y0 = xy(0, 0)
    x1, y1 = xy(n, n)
    body.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black"/>')
    x2, y2 = xy(0, 2 * n)
    body.append(f'<line x1="{x2}" y1="{y2}" x2="{x1}" y2="{y1}" stroke="black" stroke-dasharray="4 3"/>')
    for p in range(1, rows + 1):
        lx, ly = xy(0, p - 0.5)
        body.append(f'<text x="{lx - 6}" y="{ly + 4}" font-size="11" text-anchor="end">{rho(n, p)}</text>')
        c = T.phys_col[p - 1]
        cx, cy = xy(c - 0.5, p - 0.5)
        text = _label_text(labels, T, p)
        if text is not None:
            body.append(f'<text x="{cx}" y="{cy + 4}" font-size="10" text-anchor="middle">{escape(text)}</text>')
        elif T.is_free(p):
            body.append(_star(cx, cy, CELL * 0.35))
        else:
            body.append(f'<circle cx="{cx}" cy="{cy}" r="{CELL * 0.2}" fill="black"/>')
    return _svg(ox + n * CELL + 10, H + 10, body)


def pistol_svg(f: SurjectivePistol) -> str:
    n = f.n
    ox, oy = 30, 20
    H = oy + n * CELL
    dfp = doubled_fixed_points(f)
    body = []
    for j in range(1, 2 * n + 1):
        for k in range((j + 1) // 2, n + 1):
            x, y = ox + (j - 1) * CELL, H - k * CELL
            body.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="none" stroke="#999"/>')
        cx, cy = ox + (j - 0.5) * CELL, H - (f(j) // 2 - 0.5) * CELL
        if j % 2 == 0 and f(j) not in dfp:
            body.append(f'<text x="{cx}" y="{cy + 5}" font-size="16" text-anchor="middle">×</text>')
        else:
            body.append(f'<circle cx="{cx}" cy="{cy}" r="{CELL * 0.2}" fill="black"/>')
        body.append(f'<text x="{cx}" y="{oy - 6}" font-size="11" text-anchor="middle">{j}</text>')
    for k in range(1, n + 1):
        body.append(f'<text x="{ox - 6}" y="{H - (k - 0.5) * CELL + 4}" font-size="11" text-anchor="end">{2 * k}</text>')
    return _svg(ox + 2 * n * CELL + 10, H + 10, body)


def dellac_svg(D: DellacConfig | SymplecticConfig) -> str:
    if isinstance(D, SymplecticConfig):
        D = D.base
    n = D.n
    ox, oy = 30, 10
    H = oy + 2 * n * CELL
    body = _grid(n, 2 * n, ox, oy)
    for i, c in enumerate(D.row_col, start=1):
        cx, cy = ox + (c - 0.5) * CELL, H - (i - 0.5) * CELL
        body.append(f'<circle cx="{cx}" cy="{cy}" r="{CELL * 0.2}" fill="black"/>')
    return _svg(ox + n * CELL + 10, H + 10, body)


def render(obj, fmt: str = "text", labels: Mapping | None = None) -> str:
    """Dispatch on the object type; ``fmt`` is ``text`` or ``svg``."""
    if fmt not in ("text", "svg"):
        raise ValueError(f"unknown render format {fmt!r}")
    svg = fmt == "svg"
    if isinstance(obj, Tableau):
        return tableau_svg(obj, labels) if svg else tableau_ascii(obj, labels)
    if isinstance(obj, SurjectivePistol):
        return pistol_svg(obj) if svg else pistol_ascii(obj)
    if isinstance(obj, (DellacConfig, SymplecticConfig)):
        return dellac_svg(obj) if svg else dellac_ascii(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
