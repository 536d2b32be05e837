"""Numeric checks of upper bounds, the tile-size partial order and the
lower-bound families, all on exact integer counts.
"""
from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from math import log2, prod
from typing import Iterable, Iterator

from .counting import count_full
from .numtheory import divisors, factorize, first_primes, sigma0


class Verdict(str, Enum):
    HOLDS = "holds"
    HYPOTHESES_FAIL = "hypotheses-fail"
    VIOLATION = "VIOLATION"


class BudgetExceeded(RuntimeError):
    pass


def _count(alpha: Fraction | int, n: int) -> int:
    """Count with the conventions used by the family inequalities: a
    non-integer tile size or an empty interval has no tilings."""
    if n < 1 or alpha < 1 or int(alpha) != alpha:
        return 0
    return count_full(int(alpha), n)


# --- upper bound -------------------------------------------------------------


def upper_bound_base(alpha: int, n: int) -> int:
    if alpha < 1 or n % alpha:
        raise ValueError(f"{alpha} does not divide {n}")
    sa, sb = sigma0(alpha), sigma0(n // alpha)
    return sa * sb - sa - sb + 2


def upper_bound_log2(alpha: int, n: int) -> float:
    """log2 of (s(a) s(b) - s(a) - s(b) + 2) ** log2(n), s = number of divisors."""
    return log2(n) * log2(upper_bound_base(alpha, n))


def _log2_bracket(x: int, scale: int) -> tuple[Fraction, Fraction]:
    """lo <= log2(x) <= hi with hi - lo <= 1/scale, from bit lengths of x**scale."""
    if x & (x - 1) == 0:
        e = Fraction(x.bit_length() - 1)
        return e, e
    t = (x**scale).bit_length()
    return Fraction(t - 1, scale), Fraction(t, scale)


def _exact_log2(x: int) -> int | None:
    return x.bit_length() - 1 if x & (x - 1) == 0 else None


def certify_upper_bound(count: int, alpha: int, n: int, max_scale: int = 1 << 14) -> bool:
    """Exact decision of log2(count) <= upper_bound_log2(alpha, n).

    Uses integer comparisons when log2(n) or log2(base) is an integer, and
    otherwise rational brackets of the logs that are refined until they
    separate.  The first bracket (scale 1) is the plain bit-length test.
    """
    base = upper_bound_base(alpha, n)
    if count <= 1:
        return True
    if base == 1:
        return False
    e = _exact_log2(n)
    if e is not None:
        return count <= base**e
    f = _exact_log2(base)
    if f is not None:
        return count <= n**f
    scale = 1
    while scale <= max_scale:
        c_lo, c_hi = _log2_bracket(count, scale)
        n_lo, n_hi = _log2_bracket(n, scale)
        b_lo, b_hi = _log2_bracket(base, scale)
        if c_hi <= n_lo * b_lo:
            return True
        if c_lo > n_hi * b_hi:
            return False
        scale *= 2
    raise ArithmeticError(f"could not separate log2({count}) from the bound for ({alpha}, {n})")


@dataclass(frozen=True)
class BoundRow:
    n: int
    alpha: int
    count_bits: int
    bound_log2: float
    verdict: Verdict


def upper_bound_sweep(max_n: int, min_n: int = 1) -> Iterator[BoundRow]:
    for n in range(min_n, max_n + 1):
        for a in divisors(n):
            c = count_full(a, n)
            ok = certify_upper_bound(c, a, n)
            yield BoundRow(n, a, c.bit_length(), upper_bound_log2(a, n),
                           Verdict.HOLDS if ok else Verdict.VIOLATION)


def rows_to_csv(rows: Iterable[BoundRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "alpha", "count_bits", "bound_log2", "verdict"])
    for r in rows:
        w.writerow([r.n, r.alpha, r.count_bits, f"{r.bound_log2:.6f}", r.verdict.value])
    return buf.getvalue()


def max_count(n: int) -> tuple[int, int]:
    """(alpha, count) maximizing count_full(alpha, n); ties go to the smaller alpha."""
    best_a, best = 1, -1
    for a in divisors(n):
        c = count_full(a, n)
        if c > best:
            best_a, best = a, c
    return best_a, best


# --- partial order in the tile size ------------------------------------------


def partial_order_hypotheses(alpha: int, n: int) -> bool:
    """Each prime p of alpha appears in n at least twice as often as in alpha."""
    nf = factorize(n)
    return all(2 * e <= nf.exponent(p) for p, e in factorize(alpha).factors)


def partial_order_check(alpha: int, n: int, p: int) -> Verdict:
    fa = factorize(alpha)
    if p not in fa.primes:
        raise ValueError(f"{p} is not a prime divisor of {alpha}")
    if not partial_order_hypotheses(alpha, n):
        return Verdict.HYPOTHESES_FAIL
    if count_full(alpha // p, n) < count_full(alpha, n):
        return Verdict.HOLDS
    return Verdict.VIOLATION


@dataclass
class PartialOrderSummary:
    checked: int = 0
    skipped: int = 0
    violations: list[tuple[int, int, int]] = field(default_factory=list)


def partial_order_sweep(max_n: int, min_n: int = 1) -> PartialOrderSummary:
    out = PartialOrderSummary()
    for n in range(min_n, max_n + 1):
        for a in divisors(n):
            for p in factorize(a).primes:
                v = partial_order_check(a, n, p)
                if v is Verdict.HYPOTHESES_FAIL:
                    out.skipped += 1
                    continue
                out.checked += 1
                if v is Verdict.VIOLATION:
                    out.violations.append((n, a, p))
    return out


# --- lower-bound families ----------------------------------------------------


@dataclass(frozen=True)
class FamilyReport:
    k: int
    alpha: int
    n: int
    count: int
    threshold: Fraction
    holds: bool

    @property
    def exponent(self) -> float:
        return log2(self.count) / self.k


def family_2k(k: int) -> FamilyReport:
    """count(2**(k//2), [2**k]) against the growth floor 1.5**(k-2)."""
    if k < 1:
        raise ValueError("k must be positive")
    alpha, n = 2 ** (k // 2), 2**k
    c = count_full(alpha, n)
    floor = Fraction(3, 2) ** (k - 2)
    return FamilyReport(k, alpha, n, c, floor, c > floor)


@dataclass(frozen=True)
class InequalityReport:
    """lhs >= sum(terms), with the terms labelled for reporting."""

    lhs: int
    terms: dict[str, int]

    @property
    def rhs(self) -> int:
        return sum(self.terms.values())

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "terms": self.terms, "holds": self.holds}


def ie2k9_check(k: int, alpha: int) -> InequalityReport:
    """count(a, 2^k 9) >= count(a, 2^(k-1) 9) + count(a/2, 2^(k-1) 9) + count(a/3, 2^k)."""
    if k < 1:
        raise ValueError("k must be positive")
    if alpha % 3 or alpha % 9 == 0:
        raise ValueError(f"need 3 | alpha and 9 not dividing alpha, got {alpha}")
    a = Fraction(alpha)
    return InequalityReport(
        _count(a, 2**k * 9),
        {
            "half_n": _count(a, 2 ** (k - 1) * 9),
            "half_both": _count(a / 2, 2 ** (k - 1) * 9),
            "drop_nine": _count(a / 3, 2**k),
        },
    )


def _odd_square_product(primes: list[int], upto: int) -> int:
    """prod of p_i^2 for i = 2..upto; 1 when upto == 1 and 0 when upto == 0."""
    if upto <= 0:
        return 0
    return prod(p * p for p in primes[1:upto])


def family_n(m: int, k: int) -> int:
    return 2**k * _odd_square_product(first_primes(m), m)


def family_alpha(m: int, k: int) -> int:
    return 2 ** (k // 2) * prod(first_primes(m)[1:])


def ie_general_check(m: int, k: int, alpha: int) -> InequalityReport:
    """count(a, n) >= count(a/p_m, n_drop) + count(a, n/2) + count(a/2, n/2)
    for n = 2^k p_2^2 ... p_m^2 and n_drop = n / p_m^2 (zero when m = 1)."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    ps = first_primes(m)
    pm = ps[-1]
    n = 2**k * _odd_square_product(ps, m)
    if alpha < 1 or alpha % pm or n % alpha:
        raise ValueError(f"alpha={alpha} must be a multiple of {pm} dividing {n}")
    half = 2 ** (k - 1) * _odd_square_product(ps, m)
    a = Fraction(alpha)
    return InequalityReport(
        _count(a, n),
        {
            "drop_prime": _count(a / pm, 2**k * _odd_square_product(ps, m - 1)),
            "half_n": _count(a, half),
            "half_both": _count(a / 2, half),
        },
    )


@dataclass(frozen=True)
class LowerFamilyReport:
    m: int
    k: int
    n: int
    alpha: int
    count: int

    @property
    def exponent(self) -> float:
        return log2(self.count) / self.k

    @property
    def poly_ratio(self) -> float:
        """log2(count) / log2(n); above 1 means more tilings than points."""
        return log2(self.count) / log2(self.n) if self.n > 1 else 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(exponent=self.exponent, poly_ratio=self.poly_ratio)
        return d


def lower_family_report(m: int, k: int, max_n: int = 10**12) -> LowerFamilyReport:
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    n = family_n(m, k)
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds the budget {max_n}")
    alpha = family_alpha(m, k)
    return LowerFamilyReport(m, k, n, alpha, count_full(alpha, n))
