"""Shared exact factorial table."""

import logging
import math
import threading
from typing import Optional

from utils.config import config_manager
from utils.exceptions import DomainError

logger = logging.getLogger(__name__)


class ExactFactorials:
    """Exact factorials 0!..bound! built on demand.

    The bound follows the requests: ``reserve(n)`` raises it to 4n for the
    largest n seen so far, never past the configured limit. The table only
    grows, and only under the lock. Arguments above the bound go straight to
    ``math.factorial``/``math.comb``, so a result never depends on what
    earlier callers have cached.
    """

    def __init__(self, limit: Optional[int] = None):
        """Initialize an empty table.

        Args:
            limit: Largest argument the table may ever hold. Defaults to the
                configured factorial cache bound.
        """
        self._limit = config_manager.get_factorial_cache_bound() if limit is None else limit
        if self._limit < 0:
            raise DomainError("Factorial cache bound must be nonnegative", f"got {self._limit}")
        self._bound = 0
        self._table = [1]
        self._lock = threading.Lock()

    @property
    def bound(self) -> int:
        """Largest argument currently served from the table."""
        return self._bound

    @property
    def limit(self) -> int:
        return self._limit

    def cached(self) -> int:
        """Number of entries currently in the table."""
        return len(self._table)

    def reserve(self, n: int) -> int:
        """Size the bound for counts at half step count n; returns the new bound."""
        wanted = min(4 * n, self._limit)
        if wanted > self._bound:
            with self._lock:
                if wanted > self._bound:
                    self._bound = wanted
                    logger.debug(f"Factorial cache bound raised to {wanted}")
        return self._bound

    def _extend(self, k: int) -> None:
        with self._lock:
            table = self._table
            start = len(table)
            for i in range(start, k + 1):
                table.append(table[-1] * i)
            if k >= start:
                logger.debug(f"Factorial table extended to {k}!")

    def factorial(self, k: int) -> int:
        """Exact k!."""
        if k < 0:
            raise DomainError("Factorial of a negative integer", f"k = {k}")

        if k > self._bound:
            return math.factorial(k)

        if k >= len(self._table):
            self._extend(k)
        return self._table[k]

    def binomial(self, n: int, k: int) -> int:
        """Exact binomial coefficient, 0 outside 0 <= k <= n."""
        if n < 0:
            raise DomainError("Binomial coefficient with negative n", f"n = {n}")

        if k < 0 or k > n:
            return 0

        if n > self._bound:
            return math.comb(n, k)

        return self.factorial(n) // (self.factorial(k) * self.factorial(n - k))


# Global factorial table
factorials = ExactFactorials()
