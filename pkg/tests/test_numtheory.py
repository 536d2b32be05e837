from math import prod

import pytest
from hypothesis import given, strategies as st

from tilecount.numtheory import (
    big_omega, divisors, factorize, first_primes, omega, sigma0, squarefree_products,
)


def test_factorize_small():
    assert factorize(1).factors == ()
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(97).primes == (97,)
    assert factorize(360).exponent(7) == 0


def test_divisors_sorted():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)
    assert sigma0(36) == 9


def test_prime_counts():
    assert omega(360) == 3
    assert big_omega(360) == 6
    assert omega(1) == big_omega(1) == 0


def test_squarefree_products():
    assert squarefree_products(12, 1) == {2, 3}
    assert squarefree_products(12, 2) == {6}
    assert squarefree_products(30, 3) == {30}
    assert squarefree_products(12, 3) == frozenset()


def test_first_primes():
    assert first_primes(5) == [2, 3, 5, 7, 11]
    assert first_primes(0) == []


@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_non_positive(bad):
    with pytest.raises(ValueError):
        divisors(bad)


def test_rejects_non_int():
    with pytest.raises(TypeError):
        factorize(2.0)


@given(st.integers(1, 10**6))
def test_factorization_roundtrip(n):
    f = factorize(n)
    assert f.value() == n
    assert prod(p**e for p, e in f.factors) == n
    assert sigma0(n) == len(divisors(n)) == prod(e + 1 for _, e in f.factors)


@given(st.integers(1, 5000))
def test_divisors_match_trial_division(n):
    assert divisors(n) == tuple(d for d in range(1, n + 1) if n % d == 0)
