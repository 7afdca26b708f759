"""Log-space counts for large n and the asymptotic forms of C_n and J(n, l)."""

import math

import numpy as np
from scipy.special import gammaln

from combinat.factorials import factorials
from utils.config import config_manager
from utils.data_types import LogCount
from utils.exceptions import DomainError


_LOG_PI = math.log(math.pi)
_LOG_4 = math.log(4.0)


def log_central_binomial(n: int) -> LogCount:
    """log (2n choose n); exact integer inside the exact regime, log-gamma beyond it."""
    if n < 0:
        raise DomainError("n must be nonnegative", f"got {n}")

    if n <= config_manager.get_exact_count_bound():
        factorials.reserve(n)
        return LogCount.from_count(factorials.binomial(2 * n, n))

    return LogCount(log_value=float(gammaln(2 * n + 1) - 2 * gammaln(n + 1)))


def log_catalan(n: int) -> LogCount:
    """log C_n."""
    central = log_central_binomial(n)
    return LogCount(log_value=central.log_value - math.log(n + 1))


def catalan_asymptotic(n: int) -> LogCount:
    """log of 4^n / (sqrt(pi) n^{3/2}).

    The relative error against the exact C_n is about 9/(8n) and shrinks
    monotonically.
    """
    if n < 1:
        raise DomainError("Catalan asymptotic needs n >= 1", f"got {n}")

    return LogCount(log_value=n * _LOG_4 - 0.5 * _LOG_PI - 1.5 * math.log(n))


def crossing_count_asymptotic(n: int, l: int) -> LogCount:
    """log of (2n choose n) (2l/n) exp(-l^2/n).

    The form vanishes at l = 0 and is returned as the zero flag there; use
    the exact J(n, 0) = C_n instead.
    """
    if n < 1:
        raise DomainError("Crossing asymptotic needs n >= 1", f"got {n}")
    if l < 0 or l > n:
        raise DomainError("Crossing asymptotic needs 0 <= l <= n", f"n = {n}, l = {l}")

    if l == 0:
        return LogCount.zero()

    central = log_central_binomial(n)
    return LogCount(log_value=central.log_value + math.log(2 * l / n) - l * l / n)


def crossing_log_profile(n: int) -> np.ndarray:
    """Row of log(J(n, l) / (2n choose n)) for l = 0..n.

    Built from log J(n, 0)/(2n choose n) = -log(n+1) and the exact ratio
    J(n, l+1)/J(n, l) = ((2l+3)/(2l+1)) ((n-l)/(n+l+2)), accumulated with a
    cumulative sum. No large integers are formed, so the row is usable at
    any n.

    Args:
        n: Half the loop length.

    Returns:
        Float array of length n + 1.
    """
    if n < 0:
        raise DomainError("n must be nonnegative", f"got {n}")

    profile = np.empty(n + 1, dtype=np.float64)
    profile[0] = -math.log(n + 1)
    if n == 0:
        return profile

    l = np.arange(n, dtype=np.float64)
    log_ratio = np.log1p(2.0 / (2.0 * l + 1.0)) + np.log((n - l) / (n + l + 2.0))
    profile[1:] = profile[0] + np.cumsum(log_ratio)
    return profile
