"""Exact counting of P-positions: the recurrence for g and its summed identities.

Everything here is exact integer arithmetic; the sums reach 6^16 and
beyond, so no float ever enters.  The sums are computed by actually
summing the recurrence so that the closed forms remain real assertions.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError


@lru_cache(maxsize=None)
def g(m: int) -> int:
    """Number of P-position cells on the m x m board.

    g(1) = 1, g(2m) = 4 g(m), g(2m+1) = g(m) + g(m+1).
    """
    if m < 1:
        raise DomainError(f"g is defined for m >= 1, got {m}")
    if m == 1:
        return 1
    if m % 2 == 0:
        return 4 * g(m // 2)
    return g(m // 2) + g(m // 2 + 1)


def u(x: int) -> int:
    """2-adic valuation: the largest e with 2^e dividing x."""
    if x < 1:
        raise DomainError(f"u is defined for x >= 1, got {x}")
    return (x & -x).bit_length() - 1


def sum_odd(n: int) -> int:
    """Sum of g over the odd sides 1, 3, ..., 2^n - 1."""
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    return sum(g(2 * m - 1) for m in range(1, 2 ** (n - 1) + 1))


def sum_all(n: int) -> int:
    """Sum of g over all sides 1..2^n."""
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    return sum(g(m) for m in range(1, 2 ** n + 1))
