"""Exact computation and identity checking for degenerate Bernstein polynomials."""

from .algebra import (
    DEFAULT_ORDER,
    LAM,
    ONE,
    X,
    ZERO,
    BiPoly,
    Rational,
    TruncSeries,
    binomial_series,
    bipoly_eval,
    parse_rational,
    series_invert,
    series_mul,
    series_pow,
)
from .bernoulli import BernoulliSeriesCache, degen_bernoulli, degen_bernoulli_row
from .bernstein import (
    BernsteinBasisRow,
    bernstein,
    bernstein_genfun_coeff,
    bernstein_operator,
    connection_stirling_bernoulli,
    falling_expansion,
    ratio_step,
    symmetry_pair,
    three_term_check,
    triangular_eval,
    weighted_sum,
)
from .combinatorics import (
    StirlingTable,
    build_stirling_table,
    degen_binom,
    degen_falling_factorial,
    degen_stirling2,
    falling_factorial,
    forward_difference_at_zero,
    oplus_power,
)
from .verifier import VerifyReport, verify, verify_all

__version__ = "0.1.0"
