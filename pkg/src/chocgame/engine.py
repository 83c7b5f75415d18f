"""Playable chocolate-game state machine, exhaustive solver, and optimal engine.

A state is a w x h bar with one poisoned cell.  A move breaks the bar
along a grid line; the mover eats the piece without the poison, so every
move shrinks exactly one of the four edge distances (i-1, j-1, w-i, h-j)
and the game is four-pile Nim in disguise.  ``solve`` is the independent
brute-force oracle for the XOR criterion; ``best_move`` plays the
constructive winning strategy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import NamedTuple

from .core import Cell
from .errors import CapacityError, DomainError, IllegalMoveError

VERTICAL = "vertical"
HORIZONTAL = "horizontal"

_OTHER = {"A": "B", "B": "A", "human": "engine", "engine": "human"}

DEFAULT_SOLVE_SIDE = 64


class Move(NamedTuple):
    axis: str
    cut: int


@dataclass(frozen=True)
class GameState:
    w: int
    h: int
    poison: Cell
    mover: str = "A"

    def __post_init__(self) -> None:
        if self.w < 1 or self.h < 1:
            raise DomainError(f"bar must be at least 1x1, got {self.w}x{self.h}")
        if not (1 <= self.poison.i <= self.w and 1 <= self.poison.j <= self.h):
            raise DomainError(
                f"poison {tuple(self.poison)} outside the {self.w}x{self.h} bar"
            )

    @property
    def terminal(self) -> bool:
        return self.w == 1 and self.h == 1


def other_player(tag: str) -> str:
    return _OTHER.get(tag, tag)


def piles(s: GameState) -> tuple[int, int, int, int]:
    """Edge distances (left, below, right, above) of the poison cell."""
    return (s.poison.i - 1, s.poison.j - 1, s.w - s.poison.i, s.h - s.poison.j)


def nim_value(s: GameState) -> int:
    a, b, c, d = piles(s)
    return a ^ b ^ c ^ d


def legal_moves(s: GameState) -> list[Move]:
    """All break lines: vertical cuts 1..w-1 and horizontal cuts 1..h-1."""
    moves = [Move(VERTICAL, k) for k in range(1, s.w)]
    moves += [Move(HORIZONTAL, k) for k in range(1, s.h)]
    return moves


def apply_move(s: GameState, mv: Move) -> GameState:
    """Break at the cut, keep the piece holding the poison, pass the turn."""
    i, j = s.poison
    nxt = other_player(s.mover)
    if mv.axis == VERTICAL:
        if not 1 <= mv.cut < s.w:
            raise IllegalMoveError(f"vertical cut {mv.cut} out of range 1..{s.w - 1}")
        if i <= mv.cut:
            return GameState(mv.cut, s.h, s.poison, nxt)
        return GameState(s.w - mv.cut, s.h, Cell(i - mv.cut, j), nxt)
    if mv.axis == HORIZONTAL:
        if not 1 <= mv.cut < s.h:
            raise IllegalMoveError(f"horizontal cut {mv.cut} out of range 1..{s.h - 1}")
        if j <= mv.cut:
            return GameState(s.w, mv.cut, s.poison, nxt)
        return GameState(s.w, s.h - mv.cut, Cell(i, j - mv.cut), nxt)
    raise IllegalMoveError(f"unknown axis {mv.axis!r}")


def _solve_side_bound() -> int:
    return int(os.environ.get("CHOC_MAX_SOLVE", DEFAULT_SOLVE_SIDE))


@lru_cache(maxsize=None)
def _solve_piles(sorted_piles: tuple[int, int, int, int]) -> str:
    """Backward induction on the sorted pile 4-tuple; terminal is P."""
    if sorted_piles == (0, 0, 0, 0):
        return "P"
    for idx in range(4):
        p = sorted_piles[idx]
        for v in range(p):
            child = tuple(sorted(sorted_piles[:idx] + (v,) + sorted_piles[idx + 1:]))
            if _solve_piles(child) == "P":
                return "N"
    return "P"


def solve(s: GameState, max_side: int | None = None) -> str:
    """Classify the state P or N by exhaustive search.

    Memoized on the sorted pile 4-tuple: the game is pile-order
    invariant, which collapses symmetric boards into one table entry.
    """
    bound = _solve_side_bound() if max_side is None else max_side
    if s.w * s.h > bound * bound:
        raise CapacityError(
            f"{s.w}x{s.h} exceeds the solver bound of {bound}x{bound} cells"
        )
    return _solve_piles(tuple(sorted(piles(s))))


def analyze_move(s: GameState, mv: Move) -> tuple[int, int]:
    """Nim values before and after the move (XOR over the four piles)."""
    return nim_value(s), nim_value(apply_move(s, mv))


# Per pile index: which axis cuts it and how the cut maps to the pile's
# new value v (left/below piles via cut = dist - v, right/above via
# cut = poison + v).
def _move_setting_pile(s: GameState, idx: int, v: int) -> Move:
    i, j = s.poison
    if idx == 0:
        return Move(VERTICAL, (i - 1) - v)
    if idx == 1:
        return Move(HORIZONTAL, (j - 1) - v)
    if idx == 2:
        return Move(VERTICAL, i + v)
    return Move(HORIZONTAL, j + v)


def best_move(s: GameState) -> Move:
    """Winning move when one exists, else the deterministic stalling move.

    With nonzero nim value X, reduce a pile whose bit at X's highest set
    bit is 1 down to (pile XOR X); the successor has nim value 0.  With
    X == 0 every move loses, so shave 1 off the largest pile, preferring
    vertical cuts and lower cut indices among ties.
    """
    if s.terminal:
        raise DomainError("terminal position has no moves")
    ps = piles(s)
    x = ps[0] ^ ps[1] ^ ps[2] ^ ps[3]
    if x:
        top = 1 << (x.bit_length() - 1)
        for idx, p in enumerate(ps):
            if p & top:
                return _move_setting_pile(s, idx, p ^ x)
        raise AssertionError("nonzero XOR must set its top bit in some pile")
    best: tuple[int, int, int] | None = None
    chosen: Move | None = None
    for idx, p in enumerate(ps):
        if p < 1:
            continue
        mv = _move_setting_pile(s, idx, p - 1)
        rank = (-p, 0 if mv.axis == VERTICAL else 1, mv.cut)
        if best is None or rank < best:
            best, chosen = rank, mv
    assert chosen is not None  # non-terminal bar has a positive pile
    return chosen


def next_state(s: GameState) -> GameState:
    """Apply the engine's move for the current mover."""
    return apply_move(s, best_move(s))


def with_mover(s: GameState, mover: str) -> GameState:
    return replace(s, mover=mover)
