"""Bit-exact file formats: PBM patterns, CSV sections, SVG renders, DOT graphs.

Text renderers put row j = m at the top (j grows upward on screen).
PBM and CSV are round-trip exact; SVG and DOT are presentation-only.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Pattern
from .errors import DomainError
from .nim_pass import OverlayPattern
from .sierpinski import Section


def save_pbm(p: Pattern) -> str:
    """Plain PBM (P1): header, `m m`, then one 0/1 line per row, top row first."""
    lines = ["P1", f"{p.m} {p.m}"]
    for j in range(p.m, 0, -1):
        row = p.rows[j - 1]
        lines.append(" ".join("1" if row >> i & 1 else "0" for i in range(p.m)))
    return "\n".join(lines) + "\n"


def load_pbm(text: str) -> Pattern:
    body = "\n".join(
        line.split("#", 1)[0] for line in text.splitlines()
    )
    tokens = body.split()
    if not tokens or tokens[0] != "P1":
        raise DomainError("not a plain PBM (P1) document")
    if len(tokens) < 3:
        raise DomainError("PBM header is missing dimensions")
    try:
        w, h = int(tokens[1]), int(tokens[2])
    except ValueError as exc:
        raise DomainError(f"bad PBM dimensions: {tokens[1]!r} {tokens[2]!r}") from exc
    if w != h:
        raise DomainError(f"pattern files must be square, got {w}x{h}")
    bits = "".join(tokens[3:])
    if len(bits) != w * h or set(bits) - {"0", "1"}:
        raise DomainError(f"expected {w * h} bits of 0/1 data")
    rows = [0] * h
    for r in range(h):
        j = h - r
        line = bits[r * w:(r + 1) * w]
        rows[j - 1] = int(line[::-1], 2) if "1" in line else 0
    return Pattern(w, tuple(rows))


def save_section_csv(sec: Section) -> str:
    """One `n,level_num,level_den,cx_num,cy_num,r_num,den` line per diamond."""
    lines = [
        f"{sec.order},{sec.level_num},{sec.level_den},{d.cx_num},{d.cy_num},{d.r_num},{d.den}"
        for d in sec.diamonds()
    ]
    return "\n".join(lines) + "\n"


def load_section_csv(text: str) -> Section:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 7:
            raise DomainError(f"line {lineno}: expected 7 integers, got {len(parts)}")
        try:
            rows.append(tuple(int(x) for x in parts))
        except ValueError as exc:
            raise DomainError(f"line {lineno}: non-integer field") from exc
    if not rows:
        raise DomainError("empty section file")
    n, level_num, level_den, _, _, r_num, den = rows[0]
    for row in rows:
        if (row[0], row[1], row[2], row[5], row[6]) != (n, level_num, level_den, r_num, den):
            raise DomainError("section rows disagree on order/level/radius/denominator")
    centers = frozenset((row[3], row[4]) for row in rows)
    if len(centers) != len(rows):
        raise DomainError("duplicate diamond centers")
    return Section(n, level_num, level_den, r_num, den, centers)


def _num(x: Fraction | int) -> str:
    # Dyadic rationals are exact as floats well past any denominator here.
    f = float(x)
    return str(int(f)) if f.is_integer() else repr(f)


def pattern_svg(p: Pattern, fill: str = "#20445c") -> str:
    """Unit squares on a viewBox `0 0 m m`, j flipped to grow upward."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {p.m} {p.m}">',
        f'<rect x="0" y="0" width="{p.m}" height="{p.m}" fill="white"/>',
    ]
    for i, j in sorted(p):
        parts.append(f'<rect x="{i - 1}" y="{p.m - j}" width="1" height="1" fill="{fill}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def section_svg(sec: Section, fill: str = "#7a2e2e") -> str:
    """Diamond paths in the slice plane, y flipped to grow upward."""
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.1 2.1">',
        '<rect x="-1.05" y="-1.05" width="2.1" height="2.1" fill="white"/>',
    ]
    r = Fraction(sec.r_num, sec.den)
    for cx_num, cy_num in sorted(sec.centers):
        cx = Fraction(cx_num, sec.den)
        cy = -Fraction(cy_num, sec.den)
        parts.append(
            f'<path d="M {_num(cx - r)} {_num(cy)} L {_num(cx)} {_num(cy - r)} '
            f'L {_num(cx + r)} {_num(cy)} L {_num(cx)} {_num(cy + r)} Z" fill="{fill}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def overlay_svg(ov: OverlayPattern, blue: str = "#2b5fb4", red: str = "#c23b3b") -> str:
    """Two layers of unit squares, plain-game wins under with-pass wins."""
    m = ov.m
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {m} {m}">',
        f'<rect x="0" y="0" width="{m}" height="{m}" fill="white"/>',
    ]
    for layer, fill in ((ov.blue, blue), (ov.red, red)):
        for i, j in sorted(layer):
            parts.append(f'<rect x="{i - 1}" y="{m - j}" width="1" height="1" fill="{fill}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


_OVERLAY_CHARS = {(False, False): "0", (True, False): "B", (False, True): "R", (True, True): "X"}
_OVERLAY_BITS = {v: k for k, v in _OVERLAY_CHARS.items()}


def save_overlay_grid(ov: OverlayPattern) -> str:
    """m lines of `0|B|R|X` characters, top row first (same orientation as PBM)."""
    lines = []
    for j in range(ov.m, 0, -1):
        lines.append("".join(
            _OVERLAY_CHARS[((i, j) in ov.blue, (i, j) in ov.red)]
            for i in range(1, ov.m + 1)
        ))
    return "\n".join(lines) + "\n"


def load_overlay_grid(text: str) -> OverlayPattern:
    from .core import Cell

    lines = [line for line in text.splitlines() if line.strip()]
    m = len(lines)
    blue, red = set(), set()
    for r, line in enumerate(lines):
        if len(line) != m:
            raise DomainError(f"line {r + 1}: expected {m} cells, got {len(line)}")
        j = m - r
        for idx, ch in enumerate(line):
            if ch not in _OVERLAY_BITS:
                raise DomainError(f"line {r + 1}: bad cell character {ch!r}")
            b, rd = _OVERLAY_BITS[ch]
            if b:
                blue.add(Cell(idx + 1, j))
            if rd:
                red.add(Cell(idx + 1, j))
    return OverlayPattern(m, frozenset(blue), frozenset(red))


def dot_pass_graph(nodes: dict, edges: list) -> str:
    """Graphviz source for a with-pass game graph; P states are filled."""

    def node_id(state) -> str:
        piles, flag = state
        return "s" + "_".join(map(str, piles)) + ("_p" if flag else "_u")

    lines = ["digraph nim_with_pass {", '  node [shape=box, fontname="monospace"];']
    for state in sorted(nodes):
        piles, flag = state
        label = "(" + ",".join(map(str, piles)) + (")|pass" if flag else ")")
        style = ' style=filled fillcolor="lightblue"' if nodes[state] == "P" else ""
        lines.append(f'  {node_id(state)} [label="{label}"{style}];')
    for src, dst in edges:
        attr = ' [style=dashed, label="pass"]' if src[0] == dst[0] else ""
        lines.append(f"  {node_id(src)} -> {node_id(dst)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
