"""Fibonacci, Lucas and associated Mersenne numbers plus the edge-count formulas
for associated Mersenne graphs.

Everything here is exact integer arithmetic; Python ints never overflow, so
identities can be checked well past the 64-bit range.
"""
from __future__ import annotations

from functools import lru_cache

# numerator and denominator of the edge-count generating function, low order
# first; the series carries an extra factor x^3
EDGE_GF_NUMERATOR = (3, -2, 4, -4, -3)
EDGE_GF_DENOMINATOR = (1, -2, -1, 2, 1)  # (1 - x - x^2)^2

SMALL_M_EDGES = (0, 0, 0, 3, 4)


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"negative index {n}")


@lru_cache(maxsize=None)
def _linear_pair(a0: int, a1: int, n: int) -> int:
    a, b = a0, a1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    _check_index(n)
    return _linear_pair(0, 1, n)


def lucas(n: int) -> int:
    """L_n with L_0 = 2, L_1 = 1."""
    _check_index(n)
    return _linear_pair(2, 1, n)


@lru_cache(maxsize=None)
def assoc_mersenne(n: int) -> int:
    """M_n = M_{n-1} + M_{n-2} + 1 - (-1)^n with M_0 = 0, M_1 = 1.

    Computed from the recurrence itself, not from the Lucas identity, so the
    two can be compared.
    """
    _check_index(n)
    m_prev, m = 0, 1
    if n == 0:
        return 0
    for k in range(2, n + 1):
        m_prev, m = m, m + m_prev + 1 - (-1) ** k
    return m


def lucas_from_fib(n: int, k: int) -> int:
    """Lucas number L_n expressed through Fibonacci numbers at distance k.

    Odd k uses (F_{n-k} + F_{n+k}) / F_k, even k uses (F_{n+k} - F_{n-k}) / F_k.
    Raises ArithmeticError if the division is not exact (it always should be).
    """
    _check_index(n)
    if k < 1:
        raise ValueError("k must be a positive integer")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if k % 2:
        num = fib(n - k) + fib(n + k)
    else:
        num = fib(n + k) - fib(n - k)
    q, r = divmod(num, fib(k))
    if r:
        raise ArithmeticError(f"inexact division for n={n}, k={k}")
    return q


def edge_count_M_closed(n: int) -> int:
    """|E(M_n)| from the closed form n * L_{n-3}, tabulated for n < 4."""
    _check_index(n)
    if n < len(SMALL_M_EDGES):
        return SMALL_M_EDGES[n]
    return n * lucas(n - 3)


def series_divide(num: tuple[int, ...], den: tuple[int, ...], terms: int) -> list[int]:
    """First `terms` coefficients of num(x)/den(x) as an exact power series.

    den[0] must be +1 or -1 so that every coefficient stays an integer.
    """
    if not den or den[0] not in (1, -1):
        raise ValueError("leading denominator coefficient must be a unit")
    out: list[int] = []
    for i in range(terms):
        c = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            c -= den[j] * out[i - j]
        out.append(c * den[0])
    return out


def edge_gf_coeffs(max_n: int) -> list[int]:
    """Coefficients of x^3 .. x^max_n in the edge-count generating function."""
    _check_index(max_n)
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    return series_divide(EDGE_GF_NUMERATOR, EDGE_GF_DENOMINATOR, max_n - 2)
