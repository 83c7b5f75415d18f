import pytest
from hypothesis import given, strategies as st

from chocgame.automaton import CAGrid, ca_pattern, initial_grid, step_ca, trace_slices
from chocgame.core import pattern
from chocgame.enumeration import g, u
from chocgame.errors import CapacityError, DomainError


def _odd_cells(rows):
    return {(i + 1, jdx + 1)
            for jdx, row in enumerate(rows)
            for i in range(row.bit_length())
            if row >> i & 1}


def test_initial_grid():
    grid = initial_grid(4)
    assert grid.step == 0
    assert all(r == 0 for r in grid.prev)
    assert _odd_cells(grid.curr) == {(1, 1)}


def test_first_steps_match_small_patterns():
    grid = step_ca(initial_grid(4))
    assert grid.step == 1
    assert _odd_cells(grid.curr) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    grid = step_ca(grid)
    assert _odd_cells(grid.curr) == {(1, 1), (2, 2), (3, 3), (1, 3), (3, 1)}


def test_step_capacity_guard():
    grid = step_ca(initial_grid(2))  # slice 2 still fits
    with pytest.raises(CapacityError):
        step_ca(grid)  # slice 3 would not


def test_grid_validation():
    with pytest.raises(DomainError):
        initial_grid(0)
    with pytest.raises(DomainError):
        CAGrid(step=0, extent=2, prev=(0,), curr=(0, 0))


def test_ca_pattern_examples():
    assert ca_pattern(1).cells() == {(1, 1)}
    assert ca_pattern(11) == pattern(11)
    for k in range(1, 7):
        p = ca_pattern(2 ** k)
        assert p == pattern(2 ** k)
        assert p.count == g(2 ** k) == 4 ** k
    with pytest.raises(DomainError):
        ca_pattern(0)


@pytest.mark.parametrize("m", list(range(1, 130)) + [171, 256])
def test_ca_equals_xor_kernel(m):
    assert ca_pattern(m) == pattern(m)


@pytest.mark.parametrize("m", range(1, 49))
def test_packed_run_equals_stepwise_run(m):
    slices = list(trace_slices(m))
    assert slices[-1][0] == m
    assert slices[-1][1] == ca_pattern(m)


def test_support_stays_in_growing_square():
    for step, frame in trace_slices(16):
        for i, j in frame:
            assert i <= step and j <= step


@pytest.mark.parametrize("bound", [128])
def test_xor_step_relations_exhaustive_small(bound):
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            if u(a) < u(b):
                assert a ^ b == ((a - 1) ^ b) + 1
            elif u(a) > u(b):
                assert a ^ b == (a ^ (b - 1)) + 1
            else:
                assert a ^ b == (a - 1) ^ (b - 1)
            assert (u(a) == u(b)) == (a ^ (b - 1) == (a - 1) ^ b)


@given(st.integers(1, 10 ** 9), st.integers(1, 10 ** 9))
def test_xor_step_relations_random_large(a, b):
    if u(a) < u(b):
        assert a ^ b == ((a - 1) ^ b) + 1
    elif u(a) > u(b):
        assert a ^ b == (a ^ (b - 1)) + 1
    else:
        assert a ^ b == (a - 1) ^ (b - 1)
    assert (u(a) == u(b)) == (a ^ (b - 1) == (a - 1) ^ b)
