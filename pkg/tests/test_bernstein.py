import io
import random
import warnings
from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenbernstein.algebra import LAM, ONE, X, ZERO, bipoly_eval
from degenbernstein.bernstein import (
    CSV_HEADER,
    basis_csv_rows,
    bernstein,
    bernstein_genfun_coeff,
    bernstein_operator,
    bernstein_row,
    connection_stirling_bernoulli,
    falling_expansion,
    ratio_step,
    symmetry_pair,
    three_term_check,
    triangular_eval,
    weighted_sum,
    weighted_sum_closed_form,
    write_basis_csv,
)
from degenbernstein.combinatorics import degen_falling_factorial
from degenbernstein.errors import IndexRangeError, OutOfSupportWarning, SingularInputError

q = st.fractions(min_value=-3, max_value=3, max_denominator=11)


def unit_product(n):
    """(1)_{n,lam} = prod_{j=1}^{n-1} (1 - j lam)."""
    out = ONE
    for j in range(1, n):
        out = out * (1 - j * LAM)
    return out


class TestDirect:
    def test_examples(self):
        assert bernstein(0, 0) == 1
        assert bernstein(1, 2) == 2 * X * (1 - X)
        assert bernstein(1, 3, F(1, 2), F(1, 4)) == F(3, 16)

    @pytest.mark.parametrize("n", range(11))
    def test_lambda_zero_is_classical(self, n):
        for k in range(n + 1):
            assert bernstein(k, n).substitute(lam=F(0)) == comb(n, k) * X**k * (1 - X) ** (n - k)

    @pytest.mark.parametrize("k, n", [(-1, 2), (3, 2), (0, -1)])
    def test_index_guard(self, k, n):
        with pytest.raises(IndexRangeError):
            bernstein(k, n)

    @pytest.mark.parametrize("n", range(13))
    def test_row_sum(self, n):
        assert bernstein_row(n).total() == unit_product(n)

    def test_degrees(self):
        for n in range(1, 9):
            for k in range(n + 1):
                b = bernstein(k, n)
                assert b.degree_x() == n
                assert b.degree_lam() <= n - 1

    def test_positive_at_lambda_zero(self):
        rng = random.Random(5)
        for _ in range(10):
            xv = F(rng.randint(1, 99), 100)
            for n in range(13):
                assert all(v > 0 for v in triangular_eval(n, xv, F(0)).values)


class TestGeneratingFunction:
    def test_examples(self):
        for k in range(5):
            assert bernstein_genfun_coeff(k, k) == degen_falling_factorial(X, k)
        assert bernstein_genfun_coeff(0, 1) == 1 - X

    def test_matches_direct(self):
        for n in range(11):
            for k in range(n + 1):
                assert bernstein_genfun_coeff(k, n) == bernstein(k, n)

    def test_below_support(self):
        with pytest.warns(OutOfSupportWarning):
            assert bernstein_genfun_coeff(3, 1) == ZERO


class TestTriangular:
    def test_examples(self):
        assert triangular_eval(0, F(1, 3), F(1, 5)).values == (1,)
        assert triangular_eval(2, F(1, 2), F(0)).values == (F(1, 4), F(1, 2), F(1, 4))

    def test_matches_direct_random(self):
        rng = random.Random(11)
        for _ in range(10):
            xv = F(rng.randint(-20, 20), rng.randint(1, 15))
            lv = F(rng.randint(-20, 20), rng.randint(1, 15))
            for n in range(13):
                assert triangular_eval(n, xv, lv).values == bernstein_row(n, xv, lv).values

    def test_symbolic(self):
        assert triangular_eval(6, X, LAM).values == bernstein_row(6).values


class TestRatio:
    def test_classical_example(self):
        assert ratio_step(1, 1, F(1, 3), F(0), F(2, 3)) == F(1, 3)

    def test_singular(self):
        # 1 - x - (n-k) lam = 0 at n=3, k=1, lam=1/4, x=1/2
        with pytest.raises(SingularInputError):
            ratio_step(1, 3, F(1, 2), F(1, 4), F(1))

    @given(q, q)
    @settings(max_examples=40)
    def test_corrected_reproduces_next(self, xv, lv):
        for n in range(1, 7):
            for k in range(1, n + 1):
                if 1 - xv - (n - k) * lv == 0:
                    continue
                prev = bernstein(k - 1, n, xv, lv)
                assert ratio_step(k, n, xv, lv, prev) == bernstein(k, n, xv, lv)

    def test_printed_form_disagrees(self):
        # x = 1/3, lam = 0, n = k = 1: printed multiplier is 3/2, true ratio 1/2
        assert ratio_step(1, 1, F(1, 3), F(0), F(2, 3), form="printed") == 1

    def test_unknown_form(self):
        with pytest.raises(ValueError):
            ratio_step(1, 1, F(1, 3), F(0), F(1), form="other")


class TestThreeTerm:
    def test_smallest_case_is_zero(self):
        assert three_term_check(0, 1) == ZERO

    def test_difference_is_n_minus_one_copies(self):
        # expanding the definition gives (n-k) B_{k,n} + (k+1) B_{k+1,n} = n (1 + lam(1-n)) B_{k,n-1},
        # so the returned difference is (n-1)(1 + lam(1-n)) B_{k,n-1}
        for n in range(1, 11):
            for k in range(n):
                expected = (n - 1) * (1 + LAM * (1 - n)) * bernstein(k, n - 1)
                assert three_term_check(k, n) == expected

    def test_classical_identity_at_lambda_zero(self):
        for n in range(1, 9):
            for k in range(n):
                lhs = (n - k) * bernstein(k, n, X, F(0)) + (k + 1) * bernstein(k + 1, n, X, F(0))
                assert lhs == n * bernstein(k, n - 1, X, F(0))

    def test_guard(self):
        with pytest.raises(IndexRangeError):
            three_term_check(2, 2)


class TestSymmetry:
    def test_examples(self):
        assert symmetry_pair(0, 1) == (X, X)
        assert symmetry_pair(1, 2) == (2 * X * (1 - X), 2 * X * (1 - X))

    def test_all_small(self):
        for n in range(13):
            for k in range(n + 1):
                a, b = symmetry_pair(k, n)
                assert a == b


class TestConnection:
    def test_diagonal(self):
        for k in range(5):
            assert connection_stirling_bernoulli(k, k) == degen_falling_factorial(X, k)

    @pytest.mark.parametrize("via", ["stirling", "difference"])
    def test_reproduces_basis(self, via):
        for n in range(9):
            for k in range(n + 1):
                assert connection_stirling_bernoulli(k, n, via=via) == bernstein(k, n)

    def test_numeric_route(self):
        xv, lv = F(3, 7), F(-1, 6)
        for k in range(5):
            assert connection_stirling_bernoulli(k, 5, lv, xv) == bernstein(k, 5, xv, lv)


class TestFallingExpansion:
    def test_examples(self):
        assert falling_expansion(0) == 1
        assert falling_expansion(2) == X**2 - LAM * X

    def test_identity(self):
        for n in range(11):
            assert falling_expansion(n) == degen_falling_factorial(X, n)


class TestOperator:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_reproduces_constants_and_lines(self, n):
        for xv in (F(0), F(1, 3), F(5, 7), F(1)):
            assert bernstein_operator([1] * (n + 1), n, xv) == 1
            assert bernstein_operator([F(k, n) for k in range(n + 1)], n, xv) == xv

    def test_linear_example(self):
        assert bernstein_operator([F(k, 4) for k in range(5)], 4, F(1, 3)) == F(1, 3)

    def test_constant_general_lambda(self):
        for n in range(1, 8):
            lv = F(1, 9)
            assert bernstein_operator([1] * (n + 1), n, F(2, 5), lv) == bipoly_eval(unit_product(n), 0, lv)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            bernstein_operator([1, 1], 2, F(1, 2))


class TestWeightedSum:
    def test_top_index(self):
        for n in range(1, 7):
            assert weighted_sum(n, n) == degen_falling_factorial(X, n)

    def test_small_expansion(self):
        # (1/2) * 2x(1-x) + x(x - lam)
        assert weighted_sum(1, 2) == X - LAM * X

    def test_lambda_zero_moments(self):
        for n in range(1, 9):
            for i in range(1, n + 1):
                assert weighted_sum(i, n).substitute(lam=F(0)) == X**i

    def test_closed_form(self):
        for n in range(1, 9):
            for i in range(1, n + 1):
                assert weighted_sum(i, n) == weighted_sum_closed_form(i, n)


class TestCsv:
    def test_rows_and_header(self):
        rows = basis_csv_rows(1, [F(0), F(1, 2), F(1)], 0)
        buf = io.StringIO()
        write_basis_csv(rows, buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1:] == [
            "0,0,0,1,1", "0,1/2,0,1,2", "0,1,0,0,1",
            "1,0,0,0,1", "1,1/2,0,1,2", "1,1,0,1,1",
        ]
