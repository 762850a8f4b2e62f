"""Text and SVG pictures of Temperley-Lieb diagrams.

ASCII layout: the top line is printed first.  Top arcs hang below it, bottom
arcs rise above the bottom line, and through-strands are not drawn; instead
their two endpoints carry the same letter.
"""

from string import ascii_lowercase

__all__ = ["ascii", "svg"]

STEP = 4


def _heights(arcs):
    """Nesting height of each arc (innermost arcs have height 1)."""
    out = {}
    for a, b in sorted(arcs, key=lambda ab: ab[1] - ab[0]):
        inner = [out[c] for c in out if a < c[0] and c[1] < b]
        out[(a, b)] = 1 + max(inner, default=0)
    return out


def _arc_rows(arcs, width, left, right):
    heights = _heights(arcs)
    depth = max(heights.values(), default=0)
    rows = []
    for r in range(depth):
        row = [" "] * width
        for (a, b), h in heights.items():
            ca, cb = (a - 1) * STEP + 1, (b - 1) * STEP + 1
            if r == h - 1:
                row[ca] = left
                row[cb] = right
                for c in range(ca + 1, cb):
                    row[c] = "─"
            elif r < h - 1:
                row[ca] = row[cb] = "│"
        rows.append(row)
    return rows


def _strand_letter(i):
    return ascii_lowercase[i] if i < 26 else "*"


def ascii(d):
    """Multi-line ASCII/box-drawing picture of ``d``."""
    width = (max(d.m, d.n, 1) - 1) * STEP + 3
    top_letters = [" "] * width
    bottom_letters = [" "] * width
    for idx, (i, j) in enumerate(d.through_strands()):
        ch = _strand_letter(idx)
        top_letters[(j - 1) * STEP + 1] = ch
        bottom_letters[(i - 1) * STEP + 1] = ch

    def dots(count):
        row = [" "] * width
        for p in range(count):
            row[p * STEP + 1] = "o"
        return row

    top_rows = _arc_rows(d.top_arcs(), width, "╰", "╯")
    bottom_rows = _arc_rows(d.bottom_arcs(), width, "╭", "╮")[::-1]
    lines = [top_letters, dots(d.n)] + top_rows + bottom_rows + [dots(d.m), bottom_letters]
    return "\n".join("".join(r).rstrip() for r in lines)


def svg(d, unit=40):
    """Standalone SVG 1.1 document: semicircular arcs, straight strands."""
    cols = max(d.m, d.n, 1)
    width = cols * unit
    height = 3 * unit
    top_y, bottom_y = unit / 2, height - unit / 2

    def x(p):
        return unit / 2 + (p - 1) * unit

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:g}" '
        f'height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        '<g fill="none" stroke="black" stroke-width="2">',
    ]
    for a, b in d.top_arcs():
        r = (x(b) - x(a)) / 2
        parts.append(f'<path d="M {x(a):g} {top_y:g} A {r:g} {r:g} 0 0 0 {x(b):g} {top_y:g}"/>')
    for a, b in d.bottom_arcs():
        r = (x(b) - x(a)) / 2
        parts.append(f'<path d="M {x(a):g} {bottom_y:g} A {r:g} {r:g} 0 0 1 {x(b):g} {bottom_y:g}"/>')
    for i, j in d.through_strands():
        parts.append(f'<line x1="{x(i):g}" y1="{bottom_y:g}" x2="{x(j):g}" y2="{top_y:g}"/>')
    parts.append("</g>")
    parts.append('<g fill="black">')
    for p in range(1, d.n + 1):
        parts.append(f'<circle cx="{x(p):g}" cy="{top_y:g}" r="4"/>')
    for p in range(1, d.m + 1):
        parts.append(f'<circle cx="{x(p):g}" cy="{bottom_y:g}" r="4"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
