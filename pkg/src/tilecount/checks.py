"""Named verification checks shared by ``tilecount selftest`` and the test suite.

Each check returns a ``CheckResult``; none of them raise on a failed
verification, so callers can report every outcome.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .bounds import (
    family_2k,
    ie2k9_check,
    ie_general_check,
    lower_family_report,
    partial_order_sweep,
    upper_bound_sweep,
    Verdict,
)
from .core import (
    BoxShape,
    PointSet,
    TilingError,
    initial_meta_points,
    interval_tiling,
    is_valid_tiling,
    overlap_check,
    segment_rift_decomposition,
)
from .counting import count_full, count_ie, divisor_recurrence, total_count
from .enumeration import enumerate_interval
from .multidim import count_box_total, enumerate_box_total
from .numtheory import divisors, first_primes
from .oracle import brute_force_tilings, conjecture_probe
from .subtile import product_subtile_check, subtile_bound_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail} ({self.seconds:.3f}s)"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


def structure_problems(A: tuple[int, ...], B: tuple[int, ...], n: int) -> list[str]:
    """Violations of the 1-D structure theory for one tiling of [n]."""
    out = []
    dec = segment_rift_decomposition(A, n)
    if not dec.is_uniform():
        out.append("segments not uniform or rifts not divisible by k_s")
    if dec.rifts and dec.k_r != min(dec.rift_lengths()):
        out.append("first rift is not a shortest rift")
    try:
        M = initial_meta_points(A, n)
        w = dec.k_s + dec.k_r
        rebuilt = tuple(m * w + i for m in M for i in range(1, dec.k_s + 1))
        if rebuilt != tuple(A):
            out.append("meta-point reconstruction differs")
    except TilingError as e:
        out.append(f"no meta-point form: {e}")
    pa = PointSet(((a,) for a in A), 1)
    pb = PointSet(((b,) for b in B), 1)
    box = BoxShape(n)
    bad = [m for m in range(-n, n + 1) if not overlap_check(pa, pb, box, (m,))]
    if bad:
        out.append(f"overlap fails at shifts {bad[:5]}")
    return out


# --- individual checks --------------------------------------------------------


def check_count_2_4() -> CheckResult:
    return _timed("count(2,[4]) = 2", lambda: ((c := count_full(2, 4)) == 2, f"got {c}"))


def check_example_12() -> CheckResult:
    def run():
        t = interval_tiling((1, 2, 5, 6, 9, 10), (0, 2), 12)
        dec = segment_rift_decomposition(t.A, 12)
        segs = [tuple(s) for s in dec.segments]
        rifts = [tuple(r) for r in dec.interior_rifts]
        trailing = [tuple(r) for r in dec.rifts[len(rifts):]]
        ok = (
            is_valid_tiling(t.A, t.B, t.region)
            and segs == [(1, 2), (5, 6), (9, 10)]
            and rifts == [(3, 4), (7, 8)]
            and trailing == [(11, 12)]
            and (dec.k_s, dec.k_r) == (2, 2)
        )
        return ok, f"segments {segs}, rifts {rifts}, trailing {trailing}"

    return _timed("({1,2,5,6,9,10},{0,2}) tiles [12]", run)


def check_box_vs_line() -> CheckResult:
    def run():
        b, l = count_box_total(2, BoxShape(3, 2)), count_full(2, 6)
        return b == 1 and l == 2 and b < l, f"box(3,2): {b}, [6]: {l}"

    return _timed("count(2, box(3,2)) = 1 < count(2,[6]) = 2", run)


def check_agreement(max_n: int = 48) -> CheckResult:
    def run():
        bad = []
        pairs = 0
        for n in range(1, max_n + 1):
            for a in divisors(n):
                pairs += 1
                psi, ie = count_full(a, n), count_ie(a, n)
                oracle = {(t.A.ints(), t.B.ints()) for t in brute_force_tilings(a, BoxShape(n))}
                listed = {(t.A.ints(), t.B.ints()) for t in enumerate_interval(a, n)}
                if not (psi == ie == len(oracle)) or listed != oracle:
                    bad.append((a, n, psi, ie, len(oracle), len(listed)))
        return not bad, f"{pairs} (alpha, n) pairs, mismatches {bad[:3]}"

    return _timed(f"psi = ie = oracle = enumeration, n <= {max_n}", run)


def check_structure(max_n: int = 48) -> CheckResult:
    def run():
        bad = []
        total = 0
        for n in range(1, max_n + 1):
            for a in divisors(n):
                for t in enumerate_interval(a, n):
                    total += 1
                    probs = structure_problems(t.A.ints(), t.B.ints(), n)
                    if probs:
                        bad.append((t.A.ints(), n, probs))
        return not bad, f"{total} tilings, problems {bad[:3]}"

    return _timed(f"segment/rift/meta-point/overlap structure, n <= {max_n}", run)


def check_box_structure(max_size: int = 36) -> CheckResult:
    """Product form and the overlap disjunction on box tilings."""

    def run():
        bad = []
        total = 0
        for x in range(1, max_size + 1):
            for y in range(1, max_size // x + 1):
                box = BoxShape(x, y)
                for a in divisors(x * y):
                    listed = enumerate_box_total(a, box)
                    if x * y <= 12:
                        oracle = {(t.A, t.B) for t in brute_force_tilings(a, box)}
                        if oracle != {(t.A, t.B) for t in listed}:
                            bad.append(("product", x, y, a))
                    for t in listed:
                        total += 1
                        if not all(
                            overlap_check(t.A, t.B, box, (i, j))
                            for i in range(-x, x + 1)
                            for j in range(-y, y + 1)
                        ):
                            bad.append(("overlap", t.to_text()))
        return not bad, f"{total} box tilings, problems {bad[:3]}"

    return _timed(f"box tilings are products and satisfy overlap, size <= {max_size}", run)


def check_sequence(max_n: int = 10**4) -> CheckResult:
    def run():
        rec = divisor_recurrence(max_n)
        bad = [n for n in range(1, max_n + 1) if total_count(n) != rec[n]]
        return not bad, f"first mismatches {bad[:5]}"

    return _timed(f"sum over alpha equals divisor recurrence, n <= {max_n}", run)


def check_upper_bound(max_n: int = 10**4) -> CheckResult:
    def run():
        rows = 0
        bad = []
        for r in upper_bound_sweep(max_n):
            rows += 1
            if r.verdict is Verdict.VIOLATION:
                bad.append((r.alpha, r.n))
        return not bad, f"{rows} pairs, violations {bad[:5]}"

    return _timed(f"upper bound, n <= {max_n}", run)


def check_partial_order(max_n: int = 4096) -> CheckResult:
    def run():
        s = partial_order_sweep(max_n)
        return not s.violations and s.checked > 0, (
            f"{s.checked} checked, {s.skipped} outside hypotheses, violations {s.violations[:5]}"
        )

    return _timed(f"count(alpha/p) < count(alpha), n <= {max_n}", run)


def check_family_2k(max_k: int = 30) -> CheckResult:
    def run():
        bad = [k for k in range(1, max_k + 1) if not family_2k(k).holds]
        return not bad, f"k = 1..{max_k}, failures {bad}"

    return _timed(f"count(2^(k//2), [2^k]) > 1.5^(k-2), k <= {max_k}", run)


def check_inequalities(k9: int = 14, max_m: int = 3, max_k: int = 10,
                       trend_k: tuple[int, int] = (6, 10)) -> CheckResult:
    def run():
        bad = []
        n9 = 0
        for k in range(1, k9 + 1):
            for j in range(k // 2 + 1):
                n9 += 1
                if not ie2k9_check(k, 3 * 2**j).holds:
                    bad.append(("ie9", k, 3 * 2**j))
        ng = 0
        for m in range(1, max_m + 1):
            pm = first_primes(m)[-1]
            for k in range(1, max_k + 1):
                n = lower_family_report(m, k).n
                for a in divisors(n):
                    if a % pm == 0:
                        ng += 1
                        if not ie_general_check(m, k, a).holds:
                            bad.append(("general", m, k, a))
        for k in range(trend_k[0], trend_k[1] + 1):
            ex = [lower_family_report(m, k).exponent for m in range(1, max_m + 1)]
            if any(x >= y for x, y in zip(ex, ex[1:])):
                bad.append(("trend", k, ex))
        return not bad, f"{n9} 2^k*9 cases, {ng} general cases, failures {bad[:3]}"

    return _timed("recursive lower-bound inequalities and exponent trend", run)


def check_subtile(max_n: int = 36, box_side: int = 4) -> CheckResult:
    def run():
        bad = []
        cases = 0
        for n in range(1, max_n + 1):
            for a in divisors(n):
                for t in enumerate_interval(a, n):
                    for ap in divisors(a):
                        cases += 1
                        r = subtile_bound_check(ap, t.A, n, t.B)
                        if not r.holds:
                            bad.append(r)
        for x in range(1, box_side + 1):
            for y in range(1, box_side + 1):
                for a in divisors(x * y):
                    for t in enumerate_box_total(a, BoxShape(x, y)):
                        for ap in divisors(a):
                            cases += 1
                            if not product_subtile_check(t.A, ap).holds:
                                bad.append((t.to_text(), ap))
        return not bad, f"{cases} cases, failures {bad[:3]}"

    return _timed(f"tilings of tiles inject into tilings of [alpha], n <= {max_n}", run)


def check_probe(max_n: int = 6, max_window: int = 9, alpha: int = 2) -> CheckResult:
    def run():
        found = []
        runs = 0
        for n in range(alpha, max_n + 1, alpha):
            for w in range(n, max_window + 1):
                runs += 1
                r = conjecture_probe(alpha, n, w)
                found.extend(r.violations)
        return not found, f"{runs} windows probed, sets beating [n]: {found[:3]}"

    return _timed(f"no C beats [n] for alpha={alpha}, n <= {max_n}, window <= {max_window}", run)


SELFTEST: dict[str, Callable[[], CheckResult]] = {
    "count_2_4": check_count_2_4,
    "example_12": check_example_12,
    "box_vs_line": check_box_vs_line,
    "agreement": lambda: check_agreement(36),
    "structure": lambda: check_structure(36),
    "box_structure": lambda: check_box_structure(24),
    "sequence": lambda: check_sequence(2000),
    "upper_bound": lambda: check_upper_bound(2000),
    "partial_order": lambda: check_partial_order(1024),
    "family_2k": check_family_2k,
    "inequalities": lambda: check_inequalities(10, 3, 8, (6, 8)),
    "subtile": lambda: check_subtile(24, 3),
    "probe": lambda: check_probe(4, 7),
}


def run_selftest(names=None) -> list[CheckResult]:
    return [SELFTEST[k]() for k in (names or SELFTEST)]
