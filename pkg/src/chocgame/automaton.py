"""Second-order GF(2) cellular automaton that grows the P-position pattern.

Two consecutive time slices are kept; the next slice at (i, j) is the
parity of the current values at (i, j), (i-1, j), (i, j-1), (i-1, j-1)
plus the previous value at (i-1, j-1).  Started from a single live cell
at (1, 1), slice number m is exactly the side-m pattern.

Rows are bitmasks (bit i-1 = column i), so one step is a handful of
word-wide shifts and XORs per row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Pattern
from .errors import CapacityError, DomainError


@dataclass(frozen=True)
class CAGrid:
    """Slices at times step and step+1 over a square extent.

    prev[j-1] / curr[j-1] are the row-j bitmasks of the earlier and
    later slice.  Support after n steps stays inside [1, n] x [1, n],
    so an extent of E is faithful for every slice up to E.
    """

    step: int
    extent: int
    prev: tuple[int, ...]
    curr: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.extent < 1:
            raise DomainError(f"extent must be positive, got {self.extent}")
        if len(self.prev) != self.extent or len(self.curr) != self.extent:
            raise DomainError("slice row count must equal the extent")


def initial_grid(extent: int) -> CAGrid:
    """Time 0 (all dead) and time 1 (single live cell at (1, 1))."""
    if extent < 1:
        raise DomainError(f"extent must be positive, got {extent}")
    zeros = (0,) * extent
    return CAGrid(step=0, extent=extent, prev=zeros, curr=(1,) + zeros[1:])


def step_ca(grid: CAGrid) -> CAGrid:
    """Advance one step; out-of-range neighbors read as 0."""
    if grid.extent < grid.step + 2:
        raise CapacityError(
            f"extent {grid.extent} cannot hold slice {grid.step + 2}; "
            "support would be truncated"
        )
    mask = (1 << grid.extent) - 1
    rows = []
    for jdx in range(grid.extent):
        c = grid.curr[jdx]
        cb = grid.curr[jdx - 1] if jdx else 0
        pb = grid.prev[jdx - 1] if jdx else 0
        rows.append((c ^ (c << 1) ^ cb ^ (cb << 1) ^ (pb << 1)) & mask)
    return CAGrid(grid.step + 1, grid.extent, prev=grid.curr, curr=tuple(rows))


def ca_pattern(m: int) -> Pattern:
    """Run m-1 steps from the seed and read slice m as a pattern.

    The whole grid is packed into one integer (row stride m+1, the spare
    bit per row swallows the left-shift carry), so a step is five
    big-int operations regardless of m.
    """
    if m < 1:
        raise DomainError(f"side must be positive, got {m}")
    stride = m + 1
    row_mask = (1 << m) - 1
    ones_at_rows = ((1 << (stride * m)) - 1) // ((1 << stride) - 1)
    full_mask = ones_at_rows * row_mask
    prev, curr = 0, 1
    up = stride  # offset of (i, j-1) relative to (i, j)
    for _ in range(m - 1):
        nxt = (curr ^ (curr << 1) ^ (curr << up) ^ (curr << (up + 1))
               ^ (prev << (up + 1))) & full_mask
        prev, curr = curr, nxt
    rows = tuple((curr >> (stride * r)) & row_mask for r in range(m))
    return Pattern(m, rows)


def trace_slices(m: int):
    """Yield (step, Pattern) for slices 1..m on an extent-m grid."""
    if m < 1:
        raise DomainError(f"side must be positive, got {m}")
    grid = initial_grid(m)
    mask = (1 << m) - 1
    yield 1, Pattern(m, tuple(r & mask for r in grid.curr))
    for n in range(2, m + 1):
        grid = step_ca(grid)
        yield n, Pattern(m, tuple(r & mask for r in grid.curr))
