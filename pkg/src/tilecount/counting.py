"""Exact counts of canonical tilings of the interval [n] by tiles of size alpha.

Two independent routes are provided:

* the first-segment/first-rift recursion: every tiling is classified by the
  size ``k_s`` of its first run and ``k_r`` of the first gap, and the tilings
  with a given ``(k_s, k_r)`` are in bijection with the tilings of
  ``[n / (k_s + k_r)]`` by tiles of size ``alpha / k_s`` whose first run has
  length at least 2;
* inclusion-exclusion over the squarefree divisors of ``n``.

Counts are Python ints, so they never overflow.
"""
from __future__ import annotations

import os
import threading
from enum import Enum
from pathlib import Path

from .numtheory import divisors, omega, squarefree_products

CACHE_ENV = "TILECOUNT_CACHE"


class Restriction(str, Enum):
    FULL = "full"
    FIRST_SEGMENT_ONE = "first_segment_one"


def segment_options(alpha: int) -> tuple[int, ...]:
    """Possible first-segment sizes: the divisors of alpha."""
    return divisors(alpha)


def rift_options(k_s: int, alpha: int, beta: int) -> list[int]:
    """Possible first-rift sizes for first-segment size ``k_s``.

    ``k_r`` must be a multiple of ``k_s`` with ``(k_s + k_r) | k_s * beta``,
    i.e. ``k_r = k_s * (d - 1)`` for a divisor ``d >= 2`` of beta.
    """
    if k_s < 1 or alpha % k_s:
        raise ValueError(f"first segment size {k_s} does not divide {alpha}")
    if beta < 1:
        raise ValueError("beta must be positive")
    if k_s == alpha:
        return [0]
    return [k_s * (d - 1) for d in divisors(beta) if d >= 2]


class TilingCounter:
    """Memoized counter.  Entries are deterministic, so concurrent writers
    storing the same key are harmless."""

    def __init__(self, cache_path: str | os.PathLike | None = None):
        self._full: dict[tuple[int, int], int] = {}
        self._restricted: dict[tuple[int, int], int] = {}
        self._ie: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()
        self.cache_path = Path(cache_path) if cache_path else None
        if self.cache_path and self.cache_path.exists():
            self.load(self.cache_path)

    # -- recursion ---------------------------------------------------------

    def _check_args(self, alpha: int, n: int, k_s: int, k_r: int) -> None:
        if alpha < 1 or n < 1:
            raise ValueError("alpha and n must be positive")
        if k_s not in segment_options(alpha):
            raise ValueError(f"k_s={k_s} is not a divisor of alpha={alpha}")
        if n % alpha == 0 and k_r not in rift_options(k_s, alpha, n // alpha):
            raise ValueError(f"k_r={k_r} is not admissible for k_s={k_s}")

    def psi(self, alpha: int, n: int, k_s: int, k_r: int) -> int:
        self._check_args(alpha, n, k_s, k_r)
        return self._psi(alpha, n, k_s, k_r)

    def _psi(self, alpha: int, n: int, k_s: int, k_r: int) -> int:
        if n % alpha:
            return 0
        if k_r == 0:
            return 1
        sub_alpha, sub_n = alpha // k_s, n // (k_s + k_r)
        return self.full(sub_alpha, sub_n) - self.restricted(sub_alpha, sub_n)

    def count_by_pair(self, alpha: int, n: int, k_s: int, k_r: int) -> int:
        """Number of tilings whose first segment and first rift have sizes (k_s, k_r)."""
        return self.psi(alpha, n, k_s, k_r)

    def full(self, alpha: int, n: int) -> int:
        if alpha < 1 or n < 1:
            raise ValueError("alpha and n must be positive")
        if n % alpha:
            return 0
        alpha = min(alpha, n // alpha)  # |T(a,[n])| = |T(n/a,[n])|
        key = (alpha, n)
        hit = self._full.get(key)
        if hit is not None:
            return hit
        beta = n // alpha
        total = 0
        for k_s in segment_options(alpha):
            for k_r in rift_options(k_s, alpha, beta):
                total += self._psi(alpha, n, k_s, k_r)
        self._full[key] = total
        return total

    def restricted(self, alpha: int, n: int) -> int:
        """Tilings whose first segment is a single point."""
        if alpha < 1 or n < 1:
            raise ValueError("alpha and n must be positive")
        if n % alpha:
            return 0
        key = (alpha, n)
        hit = self._restricted.get(key)
        if hit is not None:
            return hit
        if alpha == 1:
            total = 1
        else:
            total = sum(self._psi(alpha, n, 1, k_r) for k_r in rift_options(1, alpha, n // alpha))
        self._restricted[key] = total
        return total

    # -- inclusion-exclusion ------------------------------------------------

    def ie(self, alpha: int, n: int) -> int:
        if alpha < 1 or n < 1:
            raise ValueError("alpha and n must be positive")
        if n % alpha:
            return 0
        if n == 1:
            return 1
        key = (alpha, n)
        hit = self._ie.get(key)
        if hit is not None:
            return hit
        total = 0
        for k in range(1, omega(n) + 1):
            sign = 1 if k % 2 else -1
            for v in squarefree_products(n, k):
                m = n // v
                term = self.ie(alpha, m) if m % alpha == 0 else 0
                if alpha % v == 0:
                    term += self.ie(alpha // v, m)
                total += sign * term
        self._ie[key] = total
        return total

    # -- persistence ----------------------------------------------------------

    def load(self, path: str | os.PathLike) -> int:
        """Merge ``alpha,n,restriction,value`` lines from ``path``; returns lines read."""
        tables = {Restriction.FULL.value: self._full, Restriction.FIRST_SEGMENT_ONE.value: self._restricted}
        read = 0
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                a, n, r, v = line.split(",")
                tables[r][(int(a), int(n))] = int(v)
                read += 1
        return read

    def save(self, path: str | os.PathLike | None = None) -> Path:
        path = Path(path or self.cache_path)
        tmp = path.with_suffix(path.suffix + ".tmp")
        with self._lock, open(tmp, "w") as fh:
            for (a, n), v in sorted(self._full.items()):
                fh.write(f"{a},{n},{Restriction.FULL.value},{v}\n")
            for (a, n), v in sorted(self._restricted.items()):
                fh.write(f"{a},{n},{Restriction.FIRST_SEGMENT_ONE.value},{v}\n")
        os.replace(tmp, path)
        return path

    def clear(self) -> None:
        self._full.clear()
        self._restricted.clear()
        self._ie.clear()


_default = TilingCounter(os.environ.get(CACHE_ENV) or None)


def default_counter() -> TilingCounter:
    return _default


def psi(alpha: int, n: int, k_s: int, k_r: int) -> int:
    return _default.psi(alpha, n, k_s, k_r)


def count_full(alpha: int, n: int) -> int:
    """|T(alpha, [n])|."""
    return _default.full(alpha, n)


def count_restricted(alpha: int, n: int) -> int:
    """Tilings of [n] by tiles of size alpha whose first segment has size 1."""
    return _default.restricted(alpha, n)


def count_by_pair(alpha: int, n: int, k_s: int, k_r: int) -> int:
    return _default.count_by_pair(alpha, n, k_s, k_r)


def count_ie(alpha: int, n: int) -> int:
    """|T(alpha, [n])| by inclusion-exclusion over squarefree divisors of n."""
    return _default.ie(alpha, n)


def total_count(n: int) -> int:
    """Tilings of [n] summed over every tile size."""
    return sum(count_full(a, n) for a in divisors(n))


def divisor_recurrence(limit: int) -> list[int]:
    """a(1..limit) with a(n) = 1 + sum of a(d) over proper divisors d of n.

    Index 0 is unused.  Computed by a sieve, independently of the tiling counts.
    """
    a = [0] + [1] * limit
    for d in range(1, limit + 1):
        for m in range(2 * d, limit + 1, d):
            a[m] += a[d]
    return a
