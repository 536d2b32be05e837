import pytest

from tilecount.core import BoxShape, PointSet, TilingError, segment_rift_decomposition
from tilecount.enumeration import enumerate_interval
from tilecount.multidim import enumerate_box_total
from tilecount.numtheory import divisors
from tilecount.subtile import (
    b_tilde, compress_points, first_pair, g1, g1_orbit, g2, g3, product_subtile_check,
    subtile_bound_check, translations_for,
)


def ints(t):
    return t.A.ints(), t.B.ints()


def test_compress():
    assert compress_points((1, 2, 5, 6), 2, 2).ints() == (1, 2, 3, 4)
    assert compress_points((1, 2, 9, 10), 2, 2).ints() == (1, 2, 5, 6)
    assert compress_points((1, 2, 3), 3, 6).ints() == (1, 2, 3)
    # unequal segment and rift: the gap of width k_r closes
    assert compress_points((1, 4), 1, 2).ints() == (1, 2)
    with pytest.raises(TilingError):
        compress_points((1,), 2, 3)


def test_b_tilde():
    assert b_tilde((0, 2, 8, 10), 2, 2).ints() == (0, 8)
    assert b_tilde((0, 2, 4), 1, 2).ints() == (0,)
    with pytest.raises(TilingError):
        b_tilde((0,), 1, 0)


def test_g1():
    assert ints(g1((1, 2, 5, 6), (0, 2), 8)) == ((1, 2, 3, 4), (0,))
    assert ints(g1((1, 3), (0, 1), 4)) == ((1, 2), (0,))
    t = g1((1, 2, 9, 10), (0, 2, 4, 6), 16)
    assert ints(t) == ((1, 2, 3, 4), (0,)) and t.region == BoxShape(4)
    t = g1((1, 2, 5, 6), (0, 2, 8, 10), 16)
    assert ints(t) == ((1, 2, 3, 4), (0, 4)) and t.region == BoxShape(8)
    with pytest.raises(TilingError):
        g1((1, 2, 3), (0,), 3)


def test_g2_g3():
    assert ints(g2((1, 2), (0, 4), (1, 2, 5, 6), 8)) == ((1, 2), (0, 2))
    assert ints(g2((1, 5), (0, 1), (1, 2, 5, 6), 8)) == ((1, 3), (0, 1))
    with pytest.raises(TilingError):
        g2((1, 2), (0, 1), (1, 2, 5, 6), 8)
    t = g3((1, 2), (0, 4), (1, 2, 5, 6), (0, 2), 8)
    assert t.region == BoxShape(4) and ints(t) == ((1, 2), (0, 2))
    assert ints(g3((1, 2, 3), (0,), (1, 2, 3), (0,), 3)) == ((1, 2, 3), (0,))
    assert ints(g3((1,), (0, 2), (1, 3), (0, 1), 4)) == ((1,), (0, 1))


def test_translations_for():
    assert translations_for((1, 2, 5, 6), 8) == (0, 2)
    with pytest.raises(TilingError):
        translations_for((1, 2, 4), 6)


def test_bound_check():
    r = subtile_bound_check(2, (1, 2, 5, 6), 8)
    assert (r.oracle_count, r.bound, r.injective) == (2, 2, True) and r.holds
    assert subtile_bound_check(1, (1, 2, 5, 6), 8).oracle_count == 1
    assert subtile_bound_check(4, (1, 2, 5, 6), 8).oracle_count == 1


def test_orbit_length_is_distinct_rift_count():
    for n in range(1, 49):
        for a in divisors(n):
            for t in enumerate_interval(a, n):
                A, B = ints(t)
                orbit = g1_orbit(A, B, n)
                d = segment_rift_decomposition(A, n)
                assert len(orbit) == len(d.rift_lengths())
                if orbit:
                    assert ints(orbit[-1]) == (tuple(range(1, a + 1)), (0,))


def test_first_pair():
    assert first_pair((1, 2, 5, 6), 8) == (2, 2)
    assert first_pair((1, 2), 2) == (2, 0)


def test_product_tiles():
    for x in range(1, 5):
        for y in range(1, 5):
            for a in divisors(x * y):
                for t in enumerate_box_total(a, BoxShape(x, y)):
                    for ap in divisors(a):
                        assert product_subtile_check(t.A, ap).holds
    r = product_subtile_check(PointSet([(1, 1), (1, 2), (3, 1), (3, 2)]), 2)
    assert r.unmatched == 0 and r.by_profile[(1, 2)] == (1, 1)
