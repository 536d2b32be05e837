import json

import pytest

from tilecount.core import BoxShape, PointSet, is_valid_tiling
from tilecount.oracle import (
    WorkCapExceeded, box_tilings, brute_force_tilings, conjecture_probe, count_tilings,
)


def ps(*xs):
    return PointSet(((x,) for x in xs), dim=1)


def test_interval():
    got = {(t.A.ints(), t.B.ints()) for t in brute_force_tilings(2, BoxShape(4))}
    assert got == {((1, 2), (0, 2)), ((1, 3), (0, 1))}
    assert count_tilings(3, BoxShape(5)) == 0
    assert count_tilings(1, BoxShape(7)) == 1


def test_non_contiguous_region():
    got = {(t.A.ints(), t.B.ints()) for t in brute_force_tilings(2, ps(1, 2, 5, 6))}
    assert got == {((1, 2), (0, 4)), ((1, 5), (0, 1))}
    assert count_tilings(2, ps(1, 2, 4)) == 0
    assert count_tilings(2, ps(1, 3)) == 1


def test_boxes():
    assert count_tilings(2, BoxShape(3, 2)) == 1
    assert [count_tilings(a, BoxShape(4, 4)) for a in (1, 2, 4, 8, 16)] == [1, 4, 6, 4, 1]
    for t in box_tilings(4, BoxShape(2, 2, 2)):
        assert is_valid_tiling(t.A, t.B, t.region)


def test_node_cap():
    with pytest.raises(WorkCapExceeded):
        count_tilings(2, BoxShape(24), node_cap=10)
    with pytest.raises(ValueError):
        count_tilings(0, BoxShape(4))


def test_probe_report():
    r = conjecture_probe(2, 4, 6)
    assert r.violations == [] and r.max_count == 2 and r.argmax_C == [1, 2, 3, 4]
    d = json.loads(r.to_json())
    assert {"violations", "max_count", "argmax_C"} <= d.keys()
    with pytest.raises(WorkCapExceeded):
        conjecture_probe(2, 8, 30, max_subsets=100)
    with pytest.raises(ValueError):
        conjecture_probe(2, 6, 4)
