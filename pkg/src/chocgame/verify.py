"""Batch invariant suites behind the `verify` CLI command.

Each suite runs a family of exhaustive checks up to a bound and reports
(checked, failed) counts; a correct build fails nothing.  The suites
deliberately cross routes: the game solver against the XOR kernel, the
three pattern generators against each other, recurrence sums against
closed forms, and the slice geometry against the cell patterns.
"""

from __future__ import annotations

from .core import Cell, cell_value, is_p_position, pattern
from .engine import GameState, solve
from .enumeration import g, u
from .recursion import dilate, pattern_recursive, verify_offdiagonal_empty
from .automaton import ca_pattern
from .sierpinski import (SimilarityMap, check_corner_center, check_half_congruence,
                         check_refinement, fit_similarity, integer_section)


def _compress(x: int, keep_even: bool) -> int:
    bits = bin(x)[2:][::-1]
    picked = bits[0::2] if keep_even else bits[1::2]
    return int((picked or "0")[::-1], 2)


def suite_nim(max_side: int = 12) -> tuple[int, int]:
    """Brute-force solve against the XOR criterion, squares then rectangles."""
    checked = failed = 0
    for m in range(1, max_side + 1):
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                checked += 1
                by_oracle = solve(GameState(m, m, Cell(i, j))) == "P"
                if by_oracle != is_p_position(i, j, m):
                    failed += 1
    for w in range(1, min(max_side, 8) + 1):
        for h in range(1, min(max_side, 8) + 1):
            for i in range(1, w + 1):
                for j in range(1, h + 1):
                    checked += 1
                    by_oracle = solve(GameState(w, h, Cell(i, j))) == "P"
                    if by_oracle != (cell_value(i, j, w, h) == 0):
                        failed += 1
    return checked, failed


def suite_doubling(max_side: int = 256) -> tuple[int, int]:
    """Cell-level doubling: dilation, odd/even subgrids, empty odd cross."""
    checked = failed = 0
    for m in range(1, max_side + 1):
        checked += 1
        if dilate(pattern(m)).rows != pattern(2 * m).rows:
            failed += 1
        odd = pattern(2 * m + 1)
        checked += 4
        if tuple(_compress(r, True) for r in odd.rows[0::2]) != pattern(m + 1).rows:
            failed += 1
        if tuple(_compress(r, False) for r in odd.rows[1::2]) != pattern(m).rows:
            failed += 1
        if any(_compress(r, True) for r in odd.rows[1::2]):
            failed += 1
        if any(_compress(r, False) for r in odd.rows[0::2]):
            failed += 1
    return checked, failed


def suite_decomposition(max_side: int = 256) -> tuple[int, int]:
    """Recursive generator against the XOR kernel, plus the empty side bands."""
    checked = failed = 0
    for m in range(1, max_side + 1):
        checked += 1
        if pattern_recursive(m).rows != pattern(m).rows:
            failed += 1
        if m >= 2:
            checked += 1
            if not verify_offdiagonal_empty(m):
                failed += 1
    return checked, failed


def suite_sums(max_order: int = 16) -> tuple[int, int]:
    """Counting identities, exact; plus recurrence vs direct pattern counts."""
    from .enumeration import sum_all, sum_odd

    checked = failed = 0
    for n in range(1, max_order + 1):
        checked += 4
        if sum_odd(n) != 6 ** (n - 1):
            failed += 1
        if sum_all(n) != (4 ** n + 6 ** n) // 2:
            failed += 1
        if sum(g(m) for m in range(1, 2 ** n)) != 2 ** (n - 1) * (3 ** n - 2 ** n):
            failed += 1
        if g(2 ** n) + 2 * sum(g(m) for m in range(1, 2 ** n)) != 6 ** n:
            failed += 1
    for m in range(1, min(1024, 2 ** max_order) + 1):
        checked += 1
        if g(m) != pattern(m).count:
            failed += 1
    return checked, failed


def suite_ca(max_side: int = 256) -> tuple[int, int]:
    """Automaton slices against the XOR kernel, plus the XOR step relations."""
    checked = failed = 0
    for m in range(1, max_side + 1):
        checked += 1
        if ca_pattern(m).rows != pattern(m).rows:
            failed += 1
    for a in range(1, 513):
        for b in range(1, 513):
            checked += 2
            ua, ub = u(a), u(b)
            if ua < ub:
                ok = a ^ b == ((a - 1) ^ b) + 1
            elif ua > ub:
                ok = a ^ b == (a ^ (b - 1)) + 1
            else:
                ok = a ^ b == (a - 1) ^ (b - 1)
            if not ok:
                failed += 1
            if (ua == ub) != (a ^ (b - 1) == (a - 1) ^ b):
                failed += 1
    return checked, failed


def suite_section(max_order: int = 6) -> tuple[int, int]:
    """Slice counts, similarity fits, refinement, and corner/center structure."""
    checked = failed = 0
    for n in range(1, max_order + 1):
        for m in range(1, 2 ** n + 1):
            sec = integer_section(n, m)
            checked += 3
            if sec.count != g(m):
                failed += 1
            if not isinstance(fit_similarity(sec, pattern(m)), SimilarityMap):
                failed += 1
            if not check_refinement(n, m):
                failed += 1
            if m >= 2:
                checked += 1
                if not check_corner_center(n, m):
                    failed += 1
    return checked, failed


def suite_half(max_order: int = 6) -> tuple[int, int]:
    """Half-level sections against the half-scale odd-level sections."""
    checked = failed = 0
    for n in range(1, max_order + 1):
        for m in range(1, 2 ** n):
            checked += 1
            if not check_half_congruence(n, m):
                failed += 1
    return checked, failed


SUITES = {
    "nim": suite_nim,
    "doubling": suite_doubling,
    "decomposition": suite_decomposition,
    "sums": suite_sums,
    "ca": suite_ca,
    "section": suite_section,
    "half": suite_half,
}


def run_suites(names, max_bound: int | None = None):
    """Yield (name, checked, failed) for each requested suite."""
    for name in names:
        fn = SUITES[name]
        result = fn() if max_bound is None else fn(max_bound)
        yield (name, *result)
