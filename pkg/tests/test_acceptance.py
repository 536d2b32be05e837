"""Acceptance criteria, one test each.

Every test prints a PASS/FAIL line with its measured time and budget; the
lines are also repeated in the pytest terminal summary.
"""
import time

import pytest

from tilecount import checks
from tilecount.counting import default_counter

RESULTS: list[str] = []

CRITERIA = [
    # (id, description, check, budget in seconds)
    (1, "count(2,[4]) = 2", checks.check_count_2_4, 0.001),
    (2, "({1,2,5,6,9,10},{0,2}) tiles [12] with the printed segments and rifts",
     checks.check_example_12, 0.001),
    (3, "count(2, box(3,2)) = 1 < count(2,[6]) = 2", checks.check_box_vs_line, 0.001),
    (4, "psi = ie = oracle and enumeration = oracle set, n <= 48",
     lambda: checks.check_agreement(48), 300.0),
    (5, "total count = divisor recurrence, n <= 10^4", lambda: checks.check_sequence(10**4), 120.0),
    (6, "upper bound, n <= 10^4", lambda: checks.check_upper_bound(10**4), 120.0),
    (7, "partial order, n <= 4096", lambda: checks.check_partial_order(4096), 120.0),
    (8, "count(2^(k//2),[2^k]) > 1.5^(k-2), k <= 30", lambda: checks.check_family_2k(30), 10.0),
    (9, "2^k*9 (k <= 14) and general (m <= 3, k <= 10) inequalities, exponent trend k in [6,10]",
     lambda: checks.check_inequalities(14, 3, 10, (6, 10)), 60.0),
    (10, "tilings of tiles inject into T(alpha',[alpha]), n <= 36",
     lambda: checks.check_subtile(36, 4), 180.0),
    (11, "segment, rift, meta-point and overlap structure, n <= 48",
     lambda: checks.check_structure(48), 300.0),
    (12, "probe alpha=2, n <= 6, window <= 9 finds no set beating [n]",
     lambda: checks.check_probe(6, 9, 2), 60.0),
]


@pytest.fixture(scope="module", autouse=True)
def cold_cache():
    # time each criterion from an empty memo table
    default_counter().clear()
    yield


@pytest.mark.parametrize("cid,desc,check,budget", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(cid, desc, check, budget):
    t0 = time.perf_counter()
    res = check()
    elapsed = time.perf_counter() - t0
    in_time = elapsed <= budget
    ok = res.ok and in_time
    line = (f"{'PASS' if ok else 'FAIL'} [{cid:2d}] {desc}: {res.detail} "
            f"({elapsed:.4f}s, budget {budget:g}s)")
    RESULTS.append(line)
    print(line)
    assert res.ok, res.detail
    assert in_time, f"took {elapsed:.4f}s, budget {budget:g}s"
