"""Higher-order degenerate Bernoulli polynomials by truncated series arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .algebra import (
    LAM,
    X,
    TruncSeries,
    binomial_series,
    series_invert,
    series_mul,
    series_pow,
)
from .combinatorics import degen_falling_factorial
from .errors import TruncationError


def quotient_series(order: int, lam=LAM) -> TruncSeries:
    """``((1 + lam t)^(1/lam) - 1) / t`` with coefficients ``(1)_{m+1,lam}/(m+1)!``."""
    return TruncSeries(
        order,
        tuple(degen_falling_factorial(1, m + 1, lam) / factorial(m + 1) for m in range(order + 1)),
    )


def bernoulli_series(k: int, order: int, x=X, lam=LAM) -> TruncSeries:
    """The generating function ``(t / ((1+lam t)^(1/lam) - 1))^k (1+lam t)^(x/lam)``."""
    inverse = series_invert(quotient_series(order, lam))
    return series_mul(series_pow(inverse, k), binomial_series(x, order, lam))


@dataclass(frozen=True)
class BernoulliSeriesCache:
    """Coefficients ``beta^{(k)}_{n,lam}(x) / n!`` for ``n <= trunc_order``."""

    order_k: int
    trunc_order: int
    coeffs: tuple

    def polynomial(self, n: int):
        """``beta^{(k)}_{n,lam}(x)`` itself."""
        if n > self.trunc_order:
            raise TruncationError(f"n={n} exceeds truncation order {self.trunc_order}")
        return self.coeffs[n] * factorial(n)

    def polynomials(self) -> list:
        return [self.polynomial(n) for n in range(self.trunc_order + 1)]

    def as_series(self) -> TruncSeries:
        return TruncSeries(self.trunc_order, self.coeffs)


@lru_cache(maxsize=512, typed=True)
def degen_bernoulli_row(n_max: int, k: int, lam=LAM, x=X) -> BernoulliSeriesCache:
    series = bernoulli_series(k, n_max, x, lam)
    return BernoulliSeriesCache(k, n_max, series.coeffs)


def degen_bernoulli(n: int, k: int, x=X, lam=LAM, order: int | None = None):
    """``beta^{(k)}_{n,lam}(x)``.

    ``order`` caps the series truncation; asking for ``n > order`` raises
    :class:`TruncationError`.  By default the series is cut right at ``n``.
    """
    if order is None:
        order = n
    if n > order:
        raise TruncationError(f"n={n} exceeds truncation order {order}")
    return degen_bernoulli_row(order, k, lam, x).polynomial(n)
