"""Four-pile Nim with a shared one-time pass, mapped onto the square board.

The pass is a single token either player may spend (never at the
terminal position); spending it flips a shared flag.  States are solved
retrograde over the DAG ordered by (pile sum, flag): the no-pass layer
is plain Nim and seeds the pass-available layer.  Projecting the board
map (i-1, j-1, m-i, m-j) over all cells gives the blue (plain) and red
(with-pass) winning overlays.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cell, pattern
from .errors import CapacityError, DomainError

DEFAULT_PILE_BOUND = 32
MAX_OVERLAY_SIDE = 64

_P, _N = "P", "N"


@dataclass(frozen=True)
class PassState:
    piles: tuple[int, int, int, int]
    pass_available: bool = True

    def __post_init__(self) -> None:
        if len(self.piles) != 4 or any(p < 0 for p in self.piles):
            raise DomainError(f"need four nonnegative piles, got {self.piles}")
        object.__setattr__(self, "piles", tuple(sorted(self.piles)))

    @property
    def terminal(self) -> bool:
        return self.piles == (0, 0, 0, 0)


class PassSolver:
    """Win/loss tables for every sorted pile 4-tuple up to a bound."""

    def __init__(self, bound: int):
        if bound < 0:
            raise DomainError(f"pile bound must be nonnegative, got {bound}")
        self.bound = bound
        self.no_pass: dict[tuple[int, int, int, int], str] = {}
        self.with_pass: dict[tuple[int, int, int, int], str] = {}
        self._build()

    def _build(self) -> None:
        by_sum: dict[int, list[tuple[int, int, int, int]]] = {}
        b = self.bound
        for a in range(b + 1):
            for c in range(a, b + 1):
                for d in range(c, b + 1):
                    for e in range(d, b + 1):
                        by_sum.setdefault(a + c + d + e, []).append((a, c, d, e))
        for total in sorted(by_sum):
            layer = by_sum[total]
            for piles in layer:  # no-pass layer first: the pass move lands here
                self.no_pass[piles] = self._classify(piles, self.no_pass, None)
            for piles in layer:
                self.with_pass[piles] = self._classify(piles, self.with_pass,
                                                       self.no_pass)
        assert self.no_pass[(0, 0, 0, 0)] == _P

    @staticmethod
    def _classify(piles, table, pass_target) -> str:
        if piles == (0, 0, 0, 0):
            return _P
        if pass_target is not None and pass_target[piles] == _P:
            return _N  # passing is a move; not available from the terminal
        for idx in range(4):
            p = piles[idx]
            if idx and piles[idx - 1] == p:
                continue  # same pile value, same successors
            rest = piles[:idx] + piles[idx + 1:]
            for v in range(p):
                child = tuple(sorted(rest + (v,)))
                if table[child] == _P:
                    return _N
        return _P

    def solve(self, s: PassState) -> str:
        if s.piles[-1] > self.bound:
            raise CapacityError(
                f"pile {s.piles[-1]} exceeds the solver bound {self.bound}"
            )
        table = self.with_pass if s.pass_available else self.no_pass
        return table[s.piles]


_solvers: dict[int, PassSolver] = {}


def _solver(bound: int) -> PassSolver:
    """Cached solver whose table covers piles up to bound (maybe larger)."""
    usable = [b for b in _solvers if b >= bound]
    if usable:
        return _solvers[min(usable)]
    sv = _solvers[bound] = PassSolver(bound)
    return sv


def solve_pass(s: PassState, bound: int | None = None) -> str:
    """Classify a with-pass Nim state as P or N."""
    b = DEFAULT_PILE_BOUND if bound is None else bound
    if s.piles[-1] > b:
        raise CapacityError(f"pile {s.piles[-1]} exceeds the solver bound {b}")
    return _solver(b).solve(s)


@dataclass(frozen=True)
class OverlayPattern:
    m: int
    blue: frozenset[Cell]
    red: frozenset[Cell]


def board_piles(i: int, j: int, m: int) -> tuple[int, int, int, int]:
    return (i - 1, j - 1, m - i, m - j)


def overlay(m: int) -> OverlayPattern:
    """Blue: plain-Nim P cells; red: P cells when a pass is still available."""
    if m < 1:
        raise DomainError(f"side must be positive, got {m}")
    if m > MAX_OVERLAY_SIDE:
        raise CapacityError(f"overlay side capped at {MAX_OVERLAY_SIDE}, got {m}")
    sv = _solver(m - 1) if m > 1 else _solver(0)
    blue = frozenset(pattern(m))
    red = set()
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if sv.solve(PassState(board_piles(i, j, m), True)) == _P:
                red.add(Cell(i, j))
    return OverlayPattern(m, blue, frozenset(red))


def pass_game_graph(start: tuple[int, int, int, int], max_pile: int = 8):
    """Reachable with-pass game graph from a start pile tuple.

    Returns (nodes, edges): nodes map (piles, flag) to P/N; edges are
    ((piles, flag), (piles', flag')) successor pairs.  Intended for
    small piles; DOT rendering lives in the formats module.
    """
    start_t = tuple(sorted(start))
    if len(start_t) != 4 or any(p < 0 for p in start_t):
        raise DomainError(f"need four nonnegative piles, got {start}")
    if start_t[-1] > max_pile:
        raise CapacityError(f"graph export capped at piles <= {max_pile}")
    sv = _solver(start_t[-1])
    nodes: dict[tuple[tuple[int, int, int, int], bool], str] = {}
    edges: list[tuple] = []
    stack = [(start_t, True)]
    while stack:
        state = stack.pop()
        if state in nodes:
            continue
        piles, flag = state
        nodes[state] = sv.solve(PassState(piles, flag))
        succs = set()
        for idx in range(4):
            rest = piles[:idx] + piles[idx + 1:]
            for v in range(piles[idx]):
                succs.add((tuple(sorted(rest + (v,))), flag))
        if flag and piles != (0, 0, 0, 0):
            succs.add((piles, False))
        for nxt in sorted(succs):
            edges.append((state, nxt))
            stack.append(nxt)
    return nodes, edges
