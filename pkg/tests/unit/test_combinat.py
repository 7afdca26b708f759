"""Unit tests for exact and asymptotic loop counts."""

import math
import threading

import numpy as np
import pytest

from combinat import (
    ExactFactorials,
    catalan,
    catalan_asymptotic,
    catalan_triangle,
    central_binomial,
    crossing_count_asymptotic,
    crossing_log_profile,
    crossing_partition_count,
    crossing_partition_row,
    factorials,
    log_catalan,
    log_central_binomial,
)
from utils.data_types import BigCount
from utils.exceptions import DomainError


class TestCentralBinomial:
    """Test (2n choose n)."""

    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (2, 6), (3, 20), (10, 184756)])
    def test_small_values(self, n, expected):
        """Test values known from enumeration."""
        assert central_binomial(n) == BigCount(expected)

    def test_negative_rejected(self):
        """Test negative n raises a domain error."""
        with pytest.raises(DomainError, match="nonnegative"):
            central_binomial(-1)

    def test_exact_above_cache_bound(self):
        """Test values beyond the factorial table agree with math.comb."""
        assert central_binomial(5000).value == math.comb(10000, 5000)


class TestCatalan:
    """Test Catalan numbers."""

    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (10, 16796)])
    def test_known_values(self, n, expected):
        """Test the first Catalan numbers."""
        assert catalan(n).value == expected

    def test_central_binomial_identity(self):
        """Test (n+1) C_n = (2n choose n) exactly for n <= 500."""
        for n in range(501):
            assert (n + 1) * catalan(n).value == central_binomial(n).value


class TestCatalanTriangle:
    """Test Catalan's triangle c(n, k)."""

    def test_first_column_is_one(self):
        """Test c(n, 0) = 1."""
        for n in range(30):
            assert catalan_triangle(n, 0).value == 1

    def test_known_entries(self):
        """Test entries evaluated by hand."""
        assert catalan_triangle(3, 2).value == 5
        assert catalan_triangle(2, 2).value == 2
        assert catalan_triangle(4, 3).value == 14

    def test_diagonal_is_catalan(self):
        """Test c(n, n) = C_n for n <= 500."""
        for n in range(501):
            assert catalan_triangle(n, n) == catalan(n)

    def test_k_above_n_rejected(self):
        """Test k > n raises a domain error."""
        with pytest.raises(DomainError, match="k <= n"):
            catalan_triangle(2, 3)


class TestCrossingPartitionCount:
    """Test J(n, l)."""

    def test_brute_force_values(self):
        """Test values obtained by enumerating short loops."""
        assert crossing_partition_count(1, 0).value == 1
        assert crossing_partition_count(1, 1).value == 1
        assert crossing_partition_count(2, 0).value == 2
        assert crossing_partition_count(2, 1).value == 3
        assert crossing_partition_count(2, 2).value == 1

    def test_zero_crossings_are_catalan(self):
        """Test J(n, 0) = C_n for n <= 20."""
        for n in range(21):
            assert crossing_partition_count(n, 0) == catalan(n)

    def test_partition_of_all_loops(self):
        """Test sum over l of J(n, l) = (2n choose n) for n <= 500."""
        for n in range(501):
            total = sum(crossing_partition_count(n, l).value for l in range(n + 1))
            assert total == central_binomial(n).value

    def test_triangle_relation(self):
        """Test J(n, l) = c(n+l, n-l)."""
        for n in range(0, 501, 7):
            for l in range(n + 1):
                assert crossing_partition_count(n, l) == catalan_triangle(n + l, n - l)

    def test_row_matches_pointwise(self):
        """Test the recurrence row against pointwise values."""
        for n in (0, 1, 5, 40, 333):
            row = crossing_partition_row(n)
            assert row == [crossing_partition_count(n, l).value for l in range(n + 1)]

    def test_l_above_n_rejected(self):
        """Test l > n raises a domain error."""
        with pytest.raises(DomainError, match="l <= n"):
            crossing_partition_count(3, 4)


class TestExactFactorials:
    """Test the shared factorial table."""

    def test_values_independent_of_cache_state(self):
        """Test a fresh table and a warmed table give identical results."""
        cold = ExactFactorials(limit=50)
        warm = ExactFactorials(limit=50)
        warm.reserve(20)
        warm.factorial(50)
        assert warm.cached() == 51 and cold.cached() == 1

        for k in range(0, 80):
            assert cold.factorial(k) == warm.factorial(k) == math.factorial(k)
        assert cold.binomial(60, 17) == math.comb(60, 17)

    def test_binomial_outside_range_is_zero(self):
        """Test C(n, k) = 0 for k < 0 or k > n."""
        table = ExactFactorials(limit=10)
        assert table.binomial(5, 6) == 0
        assert table.binomial(5, -1) == 0

    def test_concurrent_extension(self):
        """Test concurrent callers see the same exact values."""
        table = ExactFactorials(limit=400)
        table.reserve(100)
        results = {}

        def worker(k):
            results[k] = table.factorial(k)

        threads = [threading.Thread(target=worker, args=(k,)) for k in range(0, 400, 13)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        for k, value in results.items():
            assert value == math.factorial(k)

    def test_negative_factorial_rejected(self):
        """Test negative arguments raise a domain error."""
        with pytest.raises(DomainError, match="negative"):
            ExactFactorials(limit=5).factorial(-2)

    def test_bound_follows_largest_request(self):
        """Test the bound grows to 4n for the largest n requested, capped by the limit."""
        table = ExactFactorials(limit=100)
        assert table.bound == 0
        assert table.reserve(10) == 40
        assert table.reserve(5) == 40
        assert table.reserve(30) == 100
        assert table.limit == 100

    def test_counts_reserve_shared_table(self):
        """Test exact counts size the shared table from their n."""
        central_binomial(7)
        assert factorials.bound >= min(28, factorials.limit)


class TestLogCounts:
    """Test log-space counts."""

    def test_agrees_with_exact_up_to_300(self):
        """Test exp(log count) matches the exact integer to 1e-12."""
        for n in range(0, 301):
            exact = central_binomial(n)
            rel = log_central_binomial(n).relative_error(exact)
            assert abs(rel) < 1e-12
            assert abs(log_catalan(n).relative_error(catalan(n))) < 1e-12

    def test_big_count_to_log(self):
        """Test BigCount to LogCount for double-representable values."""
        for n in range(1, 21):
            count = catalan(n)
            assert count.to_log().to_float() == pytest.approx(count.to_float(), rel=1e-14)


class TestCatalanAsymptotic:
    """Test 4^n / (sqrt(pi) n^{3/2})."""

    @pytest.mark.parametrize("n", [100, 1000])
    def test_relative_error_below_two_over_n(self, n):
        """Test the asymptotic error bound 2/n."""
        rel = catalan_asymptotic(n).relative_error(catalan(n))
        assert abs(rel) < 2 / n

    def test_error_decreases(self):
        """Test the error shrinks along n = 100, 200, 400, 800."""
        errors = [abs(catalan_asymptotic(n).relative_error(catalan(n))) for n in (100, 200, 400, 800)]
        assert errors == sorted(errors, reverse=True)

    def test_n_zero_rejected(self):
        """Test n = 0 raises a domain error."""
        with pytest.raises(DomainError, match="n >= 1"):
            catalan_asymptotic(0)


class TestCrossingCountAsymptotic:
    """Test (2n choose n) (2l/n) exp(-l^2/n)."""

    def test_zero_crossings_flagged(self):
        """Test l = 0 returns the zero flag."""
        value = crossing_count_asymptotic(10, 0)
        assert value.is_zero
        assert value.to_float() == 0.0

    def test_argmax_location(self):
        """Test the asymptotic argmax lies within 2 of the exact argmax at n = 400."""
        n = 400
        exact_row = crossing_partition_row(n)
        exact_argmax = max(range(n + 1), key=lambda l: exact_row[l])
        asymptotic = [crossing_count_asymptotic(n, l).log_value for l in range(1, n + 1)]
        asymptotic_argmax = 1 + int(np.argmax(asymptotic))
        assert abs(asymptotic_argmax - exact_argmax) <= 2

    def test_normalization(self):
        """Test the asymptotic sum approaches (2n choose n) within 5% at n = 400."""
        n = 400
        central = log_central_binomial(n).log_value
        total = math.fsum(
            math.exp(crossing_count_asymptotic(n, l).log_value - central) for l in range(1, n + 1)
        )
        assert total == pytest.approx(1.0, rel=0.05)

    def test_pointwise_error(self):
        """Test n = 100, l = 10 within 10% of the exact count."""
        exact = crossing_partition_count(100, 10)
        assert abs(crossing_count_asymptotic(100, 10).relative_error(exact)) < 0.10

    def test_l_above_n_rejected(self):
        """Test l > n raises a domain error."""
        with pytest.raises(DomainError):
            crossing_count_asymptotic(5, 6)


class TestCrossingLogProfile:
    """Test the log-space crossing row."""

    @pytest.mark.parametrize("n", [0, 1, 2, 10, 120])
    def test_matches_exact_ratio(self, n):
        """Test exp(profile) equals J(n, l) / (2n choose n)."""
        profile = crossing_log_profile(n)
        central = central_binomial(n).value
        expected = np.array([j / central for j in crossing_partition_row(n)])
        np.testing.assert_allclose(np.exp(profile), expected, rtol=1e-12)

    def test_sums_to_one_at_large_n(self):
        """Test the normalized row sums to 1 at n = 10^5."""
        profile = crossing_log_profile(100_000)
        assert math.fsum(np.exp(profile)) == pytest.approx(1.0, rel=1e-9)
