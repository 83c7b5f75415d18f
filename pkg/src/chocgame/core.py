"""Bit-level primitives: cell values, the XOR criterion, and direct pattern generation.

A cell (i, j) of an m x n board splits the bar into four edge distances
(i-1, j-1, m-i, n-j); the cell value is their bitwise XOR.  On square
boards the zero cells are exactly the previous player's winning cells,
and the set of them is the board's pattern.

Coordinate convention (project-wide): i is the column (x, horizontal),
j is the row (y, vertical), both 1-based.  Renderers flip j so it grows
upward.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError

# All four XOR operands must stay machine-word sized; anything larger is
# far beyond what can be rendered or solved anyway.
MAX_SIDE = 1 << 20


class Cell(NamedTuple):
    i: int
    j: int


def _check_board(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"board sides must be positive, got {m}x{n}")
    if m > MAX_SIDE or n > MAX_SIDE:
        raise DomainError(f"board sides are capped at {MAX_SIDE}, got {m}x{n}")


def _check_cell(i: int, j: int, m: int, n: int) -> None:
    _check_board(m, n)
    if not (1 <= i <= m and 1 <= j <= n):
        raise DomainError(f"cell ({i},{j}) is outside the {m}x{n} board")


def cell_value(i: int, j: int, m: int, n: int) -> int:
    """XOR of the four edge distances of cell (i, j) on an m x n board."""
    _check_cell(i, j, m, n)
    return (i - 1) ^ (j - 1) ^ (m - i) ^ (n - j)


def is_p_position(i: int, j: int, m: int) -> bool:
    """True iff (i, j) is a previous-player win on the square m x m board."""
    return cell_value(i, j, m, m) == 0


@dataclass(frozen=True)
class Pattern:
    """P-position cells of a square board, packed one bitmask per row.

    rows[j-1] has bit (i-1) set iff (i, j) is a P-position.  The packed
    form makes whole-pattern comparison and row-wise set algebra cheap
    for sides in the thousands.
    """

    m: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"pattern side must be positive, got {self.m}")
        if len(self.rows) != self.m:
            raise DomainError(f"expected {self.m} rows, got {len(self.rows)}")
        mask = (1 << self.m) - 1
        for r in self.rows:
            if r & ~mask:
                raise DomainError("row bitmask has cells outside the board")

    @classmethod
    def from_cells(cls, m: int, cells) -> "Pattern":
        rows = [0] * m
        for i, j in cells:
            _check_cell(i, j, m, m)
            rows[j - 1] |= 1 << (i - 1)
        return cls(m, tuple(rows))

    @property
    def count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def has(self, i: int, j: int) -> bool:
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            return False
        return bool(self.rows[j - 1] >> (i - 1) & 1)

    def cells(self) -> set[Cell]:
        return set(self)

    def __iter__(self) -> Iterator[Cell]:
        for jdx, row in enumerate(self.rows):
            while row:
                low = row & -row
                yield Cell(low.bit_length(), jdx + 1)
                row ^= low

    def __contains__(self, cell) -> bool:
        i, j = cell
        return self.has(i, j)


def pattern(m: int) -> Pattern:
    """All P-position cells of the m x m board, via the XOR criterion.

    The cell value vanishes iff (i-1)^(m-i) == (j-1)^(m-j), so rows with
    equal row keys share one column bitmask; building those masks once
    makes the whole pattern O(m) integer ops plus row copies.
    """
    _check_board(m, m)
    col_masks: dict[int, int] = {}
    for i in range(1, m + 1):
        key = (i - 1) ^ (m - i)
        col_masks[key] = col_masks.get(key, 0) | (1 << (i - 1))
    rows = tuple(col_masks.get((j - 1) ^ (m - j), 0) for j in range(1, m + 1))
    return Pattern(m, rows)
