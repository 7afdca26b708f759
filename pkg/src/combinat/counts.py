"""Exact loop counts: central binomials, Catalan numbers, Catalan's triangle.

All results are ``BigCount`` values computed with Python integers; nothing
here rounds.
"""

from combinat.factorials import factorials
from utils.data_types import BigCount
from utils.exceptions import DomainError


def _require_nonnegative(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer", f"got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be nonnegative", f"got {value}")


def central_binomial(n: int) -> BigCount:
    """Number of 2n-step loops, (2n choose n)."""
    _require_nonnegative("n", n)
    factorials.reserve(n)
    return BigCount(factorials.binomial(2 * n, n))


def catalan(n: int) -> BigCount:
    """Catalan number C_n = (2n choose n) / (n + 1)."""
    _require_nonnegative("n", n)
    factorials.reserve(n)
    return BigCount(factorials.binomial(2 * n, n) // (n + 1))


def catalan_triangle(n: int, k: int) -> BigCount:
    """Catalan's triangle c(n, k) = (n+k)! (n-k+1) / (k! (n+1)!).

    Raises:
        DomainError: If k > n.
    """
    _require_nonnegative("n", n)
    _require_nonnegative("k", k)
    if k > n:
        raise DomainError("Catalan triangle needs k <= n", f"n = {n}, k = {k}")

    factorials.reserve(n)
    # (n+k)!/(k!(n+1)!) = C(n+k, k) / (n+1); the product is divisible by n+1.
    return BigCount(factorials.binomial(n + k, k) * (n - k + 1) // (n + 1))


def crossing_partition_count(n: int, l: int) -> BigCount:
    """J(n, l): loops of 2n steps crossing the boundary cell 2l times.

    J(n, l) = c(n+l, n-l) = (2n)! (2l+1) / ((n-l)! (n+l+1)!).

    Raises:
        DomainError: If l > n.
    """
    _require_nonnegative("n", n)
    _require_nonnegative("l", l)
    if l > n:
        raise DomainError("Crossing partition needs l <= n", f"n = {n}, l = {l}")

    factorials.reserve(n)
    return BigCount(factorials.binomial(2 * n, n - l) * (2 * l + 1) // (n + l + 1))


def crossing_partition_row(n: int) -> list[int]:
    """Exact row [J(n, 0), ..., J(n, n)].

    Uses J(n, l+1) = J(n, l) (2l+3)(n-l) / ((2l+1)(n+l+2)); each quotient is
    an integer, so floor division is exact.
    """
    _require_nonnegative("n", n)
    row = [catalan(n).value]
    for l in range(n):
        row.append(row[-1] * (2 * l + 3) * (n - l) // ((2 * l + 1) * (n + l + 2)))
    return row
