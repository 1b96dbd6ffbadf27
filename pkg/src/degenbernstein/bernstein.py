"""Degenerate Bernstein polynomials ``B_{k,n}(x|lam) = C(n,k) (x)_{k,lam} (1-x)_{n-k,lam}``.

Direct evaluation, generating-function coefficients, the recurrences, a
triangular evaluator, the (degenerate) Bernstein operator and the connection
formulas with Stirling and Bernoulli numbers.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, TextIO

from .algebra import LAM, X, binomial_series, format_rational, zero_like
from .bernoulli import degen_bernoulli_row
from .combinatorics import (
    degen_falling_factorial,
    degen_stirling2,
    falling_factorial,
    forward_difference_at_zero,
    oplus_power,
)
from .errors import IndexRangeError, OutOfSupportWarning, SingularInputError

CSV_HEADER = ("k", "x", "lambda", "value_num", "value_den")


@dataclass(frozen=True)
class BernsteinBasisRow:
    n: int
    values: tuple

    def __getitem__(self, k: int):
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def total(self):
        out = zero_like(*self.values)
        for v in self.values:
            out = out + v
        return out


def _check_indices(k: int, n: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise IndexRangeError(f"need 0 <= k <= n, got k={k}, n={n}")


def bernstein(k: int, n: int, x=X, lam=LAM):
    _check_indices(k, n)
    return comb(n, k) * degen_falling_factorial(x, k, lam) * degen_falling_factorial(1 - x, n - k, lam)


def bernstein_row(n: int, x=X, lam=LAM) -> BernsteinBasisRow:
    return BernsteinBasisRow(n, tuple(bernstein(k, n, x, lam) for k in range(n + 1)))


def bernstein_genfun_coeff(k: int, n: int, lam=LAM, x=X):
    """``n! [t^n]`` of ``(x)_{k,lam}/k! * t^k * (1 + lam t)^((1-x)/lam)``.

    For ``n < k`` the coefficient lies outside the support of the generating
    function; zero is returned and an :class:`OutOfSupportWarning` is issued.
    """
    if k < 0:
        raise IndexRangeError(f"k must be nonnegative, got {k}")
    if n < k:
        warnings.warn(f"t^{n} is below the support t^{k}.. of the series", OutOfSupportWarning)
        return zero_like(x, lam)
    series = binomial_series(1 - x, n, lam).shift(k).scale(degen_falling_factorial(x, k, lam) / factorial(k))
    return series.egf_coefficient(n)


def triangular_eval(n: int, x, lam) -> BernsteinBasisRow:
    """Row ``B_{0..n,n}(x|lam)`` built up from ``B_{0,0} = 1`` by

        B_{k,m} = (1 - x - (m-k-1) lam) B_{k,m-1} + (x - (k-1) lam) B_{k-1,m-1}

    with ``B_{k,m} = 0`` outside ``0 <= k <= m``.
    """
    if n < 0:
        raise IndexRangeError(f"n must be nonnegative, got {n}")
    zero = zero_like(x, lam)
    row = [zero + 1]
    for m in range(1, n + 1):
        new = []
        for k in range(m + 1):
            left = row[k] if k <= m - 1 else zero
            right = row[k - 1] if k >= 1 else zero
            new.append((1 - x - (m - k - 1) * lam) * left + (x - (k - 1) * lam) * right)
        row = new
    return BernsteinBasisRow(n, tuple(row))


RATIO_FORMS = ("corrected", "printed")


def ratio_multiplier(k: int, n: int, x=X, lam=LAM, form: str = "corrected"):
    """Numerator and denominator of the multiplier taking ``B_{k-1,n}`` to ``B_{k,n}``.

    ``"corrected"`` is ``(n-k+1)(x - (k-1) lam) / (k (1 - x - (n-k) lam))``,
    which follows from expanding the definition.  ``"printed"`` carries
    ``n - (k-1) lam`` in place of ``x - (k-1) lam``.
    """
    if not 1 <= k <= n:
        raise IndexRangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    if form == "corrected":
        top = x - (k - 1) * lam
    elif form == "printed":
        top = n - (k - 1) * lam
    else:
        raise ValueError(f"unknown ratio form {form!r}; choose from {RATIO_FORMS}")
    return (n - k + 1) * top, k * (1 - x - (n - k) * lam)


def ratio_step(k: int, n: int, x_val, lam_val, b_prev, form: str = "corrected") -> Fraction:
    """Apply the ratio multiplier to ``b_prev = B_{k-1,n}(x|lam)`` at a rational point."""
    num, den = ratio_multiplier(k, n, Fraction(x_val), Fraction(lam_val), form)
    if den == 0:
        raise SingularInputError(
            f"1 - x - (n-k) lambda vanishes at x={x_val}, lambda={lam_val}, n={n}, k={k}"
        )
    return num / den * Fraction(b_prev)


def three_term_check(k: int, n: int, x=X, lam=LAM):
    """``(n-k) B_{k,n} + (k+1) B_{k+1,n} - (1 + lam(1-n)) B_{k,n-1}``; zero iff the relation holds."""
    if not 0 <= k <= n - 1:
        raise IndexRangeError(f"need 0 <= k <= n-1, got k={k}, n={n}")
    return (
        (n - k) * bernstein(k, n, x, lam)
        + (k + 1) * bernstein(k + 1, n, x, lam)
        - (1 + lam * (1 - n)) * bernstein(k, n - 1, x, lam)
    )


def symmetry_pair(k: int, n: int, lam=LAM, x=X):
    """``(B_{k,n}(1-x|lam), B_{n-k,n}(x|lam))``."""
    _check_indices(k, n)
    return bernstein(k, n, 1 - x, lam), bernstein(n - k, n, x, lam)


def connection_stirling_bernoulli(k: int, n: int, lam=LAM, x=X, via: str = "stirling"):
    """``(x)_{k,lam} sum_{m=k}^n C(n,m) S_{2,lam}(m,k) beta^{(k)}_{n-m,lam}(1-x)``.

    With ``via="difference"`` the Stirling factor is replaced by
    ``Delta^k (0)_{m,lam} / k!``.
    """
    _check_indices(k, n)
    if via == "stirling":
        stirling = lambda m: degen_stirling2(m, k, lam)  # noqa: E731
    elif via == "difference":
        stirling = lambda m: forward_difference_at_zero(m, k, lam) / factorial(k)  # noqa: E731
    else:
        raise ValueError(f"unknown route {via!r}")
    betas = degen_bernoulli_row(n - k, k, lam, 1 - x)
    total = zero_like(x, lam)
    for m in range(k, n + 1):
        total = total + comb(n, m) * stirling(m) * betas.polynomial(n - m)
    return degen_falling_factorial(x, k, lam) * total


def falling_expansion(n: int, x=X, lam=LAM):
    """``sum_k (x)_k S_{2,lam}(n,k)``, which should equal ``(x)_{n,lam}``."""
    total = zero_like(x, lam)
    for k in range(n + 1):
        total = total + falling_factorial(x, k) * degen_stirling2(n, k, lam)
    return total


def bernstein_operator(samples: Sequence, n: int, x, lam=Fraction(0)):
    """``sum_k samples[k] B_{k,n}(x|lam)`` where ``samples[k] = f(k/n)``.

    At ``lam = 0`` this is the classical Bernstein operator.
    """
    if n < 1:
        raise ValueError("operator order n must be at least 1")
    if len(samples) != n + 1:
        raise ValueError(f"expected {n + 1} samples, got {len(samples)}")
    row = triangular_eval(n, x, lam)
    total = zero_like(x, lam)
    for f_k, b in zip(samples, row.values):
        total = total + Fraction(f_k) * b
    return total


def weighted_sum(i: int, n: int, x=X, lam=LAM):
    """``sum_{k=i}^n C(k,i)/C(n,i) B_{k,n}(x|lam)``."""
    if not 1 <= i <= n:
        raise IndexRangeError(f"need 1 <= i <= n, got i={i}, n={n}")
    total = zero_like(x, lam)
    for k in range(i, n + 1):
        total = total + Fraction(comb(k, i), comb(n, i)) * bernstein(k, n, x, lam)
    return total


def shifted_degen_factorial(i: int, shift, x=X, lam=LAM):
    """``(x - shift*lam)_{i,lam}``."""
    return degen_falling_factorial(x - shift * lam, i, lam)


def weighted_sum_closed_form(i: int, n: int, x=X, lam=LAM):
    """``(x)_{i,lam} (1 - i lam)_{n-i,lam}``, obtained by pulling ``(x)_{i,lam}`` out of
    ``(x)_{k+i,lam} = (x)_{i,lam} (x - i lam)_{k,lam}`` and collapsing the rest
    with the degenerate Vandermonde identity."""
    return degen_falling_factorial(x, i, lam) * degen_falling_factorial(1 - i * lam, n - i, lam)


def oplus_complement(m: int, x=X, lam=LAM):
    """``(x (+)_lam (1-x))^m``."""
    return oplus_power(x, 1 - x, m, lam)


def basis_csv_rows(n: int, xs: Iterable, lam) -> list[tuple]:
    """Rows ``(k, x, lambda, num, den)``, grouped by ``k`` then ascending ``x``."""
    lam = Fraction(lam)
    rows_by_x = [(Fraction(x), triangular_eval(n, Fraction(x), lam)) for x in xs]
    out = []
    for k in range(n + 1):
        for x, row in rows_by_x:
            v = Fraction(row[k])
            out.append((k, x, lam, v.numerator, v.denominator))
    return out


def write_basis_csv(rows: Iterable[tuple], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for k, x, lam, num, den in rows:
        writer.writerow((k, format_rational(x), format_rational(lam), num, den))


__all__ = [
    "BernsteinBasisRow",
    "CSV_HEADER",
    "RATIO_FORMS",
    "basis_csv_rows",
    "bernstein",
    "bernstein_genfun_coeff",
    "bernstein_operator",
    "bernstein_row",
    "connection_stirling_bernoulli",
    "falling_expansion",
    "oplus_complement",
    "ratio_multiplier",
    "ratio_step",
    "shifted_degen_factorial",
    "symmetry_pair",
    "three_term_check",
    "triangular_eval",
    "weighted_sum",
    "weighted_sum_closed_form",
    "write_basis_csv",
]
