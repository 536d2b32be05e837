"""Integer factorization and divisor helpers.

Everything here works on plain Python ints.  Trial division is plenty for the
sizes the counting code asks about (n well below 2**40), and results are
cached per n because the counting recursion keeps asking for the same values.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import isqrt, prod
from typing import NamedTuple


class Factorization(NamedTuple):
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        return prod(p**e for p, e in self.factors)


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    _check_positive(n)
    return Factorization(n, _factor(n))


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factor(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    _check_positive(n)
    return _divisors(n)


def sigma0(n: int) -> int:
    _check_positive(n)
    return prod(e + 1 for _, e in _factor(n))


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    _check_positive(n)
    return len(_factor(n))


def big_omega(n: int) -> int:
    """Number of prime factors counted with multiplicity."""
    _check_positive(n)
    return sum(e for _, e in _factor(n))


def squarefree_products(n: int, k: int) -> frozenset[int]:
    """Products of exactly ``k`` distinct prime divisors of ``n``."""
    _check_positive(n)
    if k < 0:
        raise ValueError("k must be non-negative")
    return frozenset(prod(c) for c in combinations(factorize(n).primes, k))


def first_primes(m: int) -> list[int]:
    """The first ``m`` primes (2, 3, 5, ...)."""
    out: list[int] = []
    c = 2
    while len(out) < m:
        if all(c % p for p in out if p <= isqrt(c)):
            out.append(c)
        c += 1
    return out
