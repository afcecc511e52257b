"""Text and SVG pictures of Young diagrams."""

from __future__ import annotations

from .young import YoungDiagram, hook_field

CELL = 20
PINK = "#FFC0CB"


def render_ascii(D: YoungDiagram, hooks: bool = False, overlay: bool = False) -> str:
    """One cell per box: ``#`` (or the hook length) for the diagram, ``*`` for
    the complement region of the bounding rectangle when ``overlay`` is set."""
    if not D.rows:
        return "(empty diagram)\n"
    field = hook_field(D) if hooks else None
    pad = len(str(field[0][0])) if field else 1
    lines = []
    for i, r in enumerate(D.rows):
        cells = [str(field[i][j]).rjust(pad) if field else "#" for j in range(r)]
        if overlay:
            cells += ["*".rjust(pad)] * (D.width - r)
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(D: YoungDiagram, hooks: bool = False, overlay: bool = False) -> str:
    w, h = D.width * CELL, D.height * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    field = hook_field(D) if hooks else None
    for i, r in enumerate(D.rows):
        y = i * CELL
        for j in range(r):
            x = j * CELL
            out.append(
                f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                f'fill="white" stroke="black"/>'
            )
            if field:
                out.append(
                    f'<text x="{x + CELL // 2}" y="{y + 14}" font-size="10" '
                    f'text-anchor="middle">{field[i][j]}</text>'
                )
        if overlay:
            for j in range(r, D.width):
                out.append(
                    f'<rect x="{j * CELL}" y="{y}" width="{CELL}" height="{CELL}" '
                    f'fill="{PINK}" stroke="black"/>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
