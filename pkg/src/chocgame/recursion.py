"""Self-similar structure: doubling, corner/center decomposition, recursive generation.

Stripping the leading binary bit of m >= 2 leaves s (the low bits) and
t = 2^(k+1) - s.  The side-m pattern is then four corner copies of the
side-s pattern plus one centered copy of the side-t pattern, which gives
a generator that never evaluates an XOR.  Doubling the side dilates
every cell into a 2x2 block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Pattern
from .errors import DomainError

_FULL_2X2 = Pattern(2, (0b11, 0b11))


@dataclass(frozen=True)
class Decomposition:
    m: int
    s: int
    t: int
    k: int


def decompose(m: int) -> Decomposition:
    """Split m >= 2 as 2^(k+1) + s with 0 <= s < 2^(k+1), and t = 2^(k+1) - s."""
    if m < 2:
        raise DomainError(f"decomposition needs m >= 2, got {m}")
    lead = 1 << (m.bit_length() - 1)
    s = m - lead
    return Decomposition(m=m, s=s, t=lead - s, k=m.bit_length() - 2)


def _spread_bits(x: int) -> int:
    """Each bit b becomes the bit pair (2b, 2b+1)."""
    y = 0
    shift = 0
    while x:
        if x & 1:
            y |= 0b11 << shift
        x >>= 1
        shift += 2
    return y


def dilate(p: Pattern) -> Pattern:
    """Blow each cell (i, j) up into the 2x2 block at (2i-1..2i, 2j-1..2j)."""
    rows: list[int] = []
    for r in p.rows:
        wide = _spread_bits(r)
        rows.append(wide)
        rows.append(wide)
    return Pattern(2 * p.m, tuple(rows))


_memo: dict[int, Pattern] = {}


def pattern_recursive(m: int, even_shortcut: bool = False) -> Pattern:
    """Side-m pattern built from the corner/center decomposition.

    Base cases 1 and 2 are hard-coded; powers of two dilate the
    half-side pattern; every other side recurses through decompose().
    With even_shortcut, all even sides take the dilation route (same
    result, fewer levels).
    """
    if m < 1:
        raise DomainError(f"pattern side must be positive, got {m}")
    cached = _memo.get(m)
    if cached is not None:
        return cached
    if m == 1:
        result = Pattern(1, (1,))
    elif m == 2:
        result = _FULL_2X2
    elif m & (m - 1) == 0 or (even_shortcut and m % 2 == 0):
        # Exact powers of two decompose onto themselves (s = 0, t = m),
        # so they must come from the doubling identity instead.
        result = dilate(pattern_recursive(m // 2, even_shortcut))
    else:
        d = decompose(m)
        rows = [0] * m
        if d.s:
            corner = pattern_recursive(d.s, even_shortcut)
            off = m - d.s
            for jdx, r in enumerate(corner.rows):
                rows[jdx] |= r | (r << off)
                rows[off + jdx] |= r | (r << off)
        center = pattern_recursive(d.t, even_shortcut)
        for jdx, r in enumerate(center.rows):
            rows[d.s + jdx] |= r << d.s
        result = Pattern(m, tuple(rows))
    _memo[m] = result
    return result


def verify_offdiagonal_empty(m: int) -> bool:
    """True iff the four side bands of the decomposition hold no P-position.

    The bands are the middle columns s+1..m-s crossed with the bottom and
    top s rows, plus their transposes; the decomposition tiles the rest.
    """
    if m < 2:
        raise DomainError(f"band check needs m >= 2, got {m}")
    d = decompose(m)
    if d.s == 0:
        return True
    from .core import pattern

    p = pattern(m)
    mid_cols = ((1 << (m - d.s)) - 1) ^ ((1 << d.s) - 1)  # bits s .. m-s-1
    side_cols = ((1 << d.s) - 1) | (((1 << d.s) - 1) << (m - d.s))
    for jdx in range(m):
        row = p.rows[jdx]
        in_band_rows = jdx < d.s or jdx >= m - d.s
        if in_band_rows and row & mid_cols:
            return False
        if not in_band_rows and row & side_cols:
            return False
    return True
