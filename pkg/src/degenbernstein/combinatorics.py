"""Degenerate falling factorials, binomials, Stirling numbers and friends.

Each function accepts formal symbols (BiPoly) or rational points for its
x/lambda arguments and returns a value in the same ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import (
    LAM,
    Scalar,
    TruncSeries,
    binomial_series,
    one_like,
    series_pow,
    zero_like,
)


def falling_factorial(x, n: int):
    """Classical falling factorial ``x(x-1)...(x-n+1)``; ``(x)_0 = 1``."""
    out = one_like(x)
    for j in range(n):
        out = out * (x - j)
    return out


def degen_falling_factorial(x, n: int, lam=LAM):
    """``(x)_{n,lam} = x(x - lam)(x - 2 lam)...(x - (n-1) lam)``."""
    out = one_like(x, lam)
    for j in range(n):
        out = out * (x - j * lam)
    return out


def degen_binom(x, n: int, lam=LAM):
    return degen_falling_factorial(x, n, lam) / factorial(n)


def oplus_power(x, y, n: int, lam=LAM):
    """Binomial convolution ``sum_k C(n,k) (x)_{k,lam} (y)_{n-k,lam}``."""
    total = zero_like(x, y, lam)
    for k in range(n + 1):
        total = total + comb(n, k) * degen_falling_factorial(x, k, lam) * degen_falling_factorial(
            y, n - k, lam
        )
    return total


def forward_difference_at_zero(m: int, k: int, lam=LAM):
    """``Delta^k (0)_{m,lam}`` with ``Delta f(x) = f(x+1) - f(x)``."""
    total = zero_like(lam)
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        total = total + sign * comb(k, j) * degen_falling_factorial(Fraction(j), m, lam)
    return total


def degen_stirling2(n: int, k: int, lam=LAM):
    """Degenerate Stirling number of the second kind ``S_{2,lam}(n, k)``.

    Computed from the finite difference sum ``Delta^k (0)_{n,lam} / k!``.
    Returns zero when ``n < k``.
    """
    if n < k:
        return zero_like(lam)
    return forward_difference_at_zero(n, k, lam) / factorial(k)


def stirling2_from_series(n: int, k: int, lam=LAM):
    """Independent route to ``S_{2,lam}(n, k)`` by coefficient extraction.

    Expands ``((1 + lam t)^(1/lam) - 1)^k / k!`` as a truncated series and
    reads off ``n! [t^n]``.  Slower than :func:`degen_stirling2`; used as a
    cross-check.
    """
    return stirling2_series(k, n, lam).egf_coefficient(n)


def stirling2_series(k: int, order: int, lam=LAM) -> TruncSeries:
    """``((1 + lam t)^(1/lam) - 1)^k / k!`` truncated at ``t^order``."""
    base = binomial_series(Fraction(1), order, lam)
    shifted = TruncSeries(order, (base[0] - 1,) + base.coeffs[1:])
    return series_pow(shifted, k).scale(Fraction(1, factorial(k)))


@dataclass(frozen=True)
class StirlingTable:
    """Triangle of ``S_{2,lam}(n, k)`` for ``0 <= k <= n <= max_n``."""

    max_n: int
    lam: Scalar
    entries: tuple

    def __getitem__(self, nk: tuple[int, int]):
        n, k = nk
        if k < 0 or n < 0 or n > self.max_n:
            raise IndexError(f"({n}, {k}) outside table of size {self.max_n}")
        if k > n:
            return zero_like(self.lam)
        return self.entries[n][k]

    def row(self, n: int) -> tuple:
        return self.entries[n]


def build_stirling_table(max_n: int, lam=LAM) -> StirlingTable:
    rows = tuple(
        tuple(degen_stirling2(n, k, lam) for k in range(n + 1)) for n in range(max_n + 1)
    )
    return StirlingTable(max_n, lam, rows)


__all__ = [
    "StirlingTable",
    "build_stirling_table",
    "degen_binom",
    "degen_falling_factorial",
    "degen_stirling2",
    "falling_factorial",
    "forward_difference_at_zero",
    "oplus_power",
    "stirling2_from_series",
    "stirling2_series",
]
