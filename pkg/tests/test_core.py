import pytest
from hypothesis import given, strategies as st

from tilecount.core import (
    BoxShape, NonCanonicalizableError, PointSet, TilingError, TilingPair, canonicalize,
    compare_tilings, format_tiling, initial_meta_points, interval_tiling, is_canonical,
    is_valid_tiling, meta_points, minkowski_sum, overlap_check, parse_tiling,
    segment_rift_decomposition, tiling_from_json, tiling_to_json,
)
from tilecount.enumeration import enumerate_interval
from tilecount.multidim import enumerate_box_total
from tilecount.numtheory import divisors


def ps(*xs):
    return PointSet(((x,) for x in xs), dim=1)


def test_pointset_normalizes():
    assert ps(3, 1, 3).ints() == (1, 3)
    assert PointSet([5, 2]).ints() == (2, 5)
    assert PointSet([(1, 2), (0, 0)]).points == ((0, 0), (1, 2))
    with pytest.raises(TilingError):
        PointSet([(1,), (1, 2)])
    with pytest.raises(TilingError):
        PointSet([])


def test_minkowski_sum():
    assert minkowski_sum(ps(1, 2), ps(0, 2)).ints() == (1, 2, 3, 4)
    assert minkowski_sum(ps(1, 2), ps(0, 1)).ints() == (1, 2, 3)


def test_valid_tilings():
    assert is_valid_tiling(ps(1, 2), ps(0, 2), BoxShape(4))
    assert is_valid_tiling(ps(1, 2, 5, 6, 9, 10), ps(0, 2), BoxShape(12))
    assert not is_valid_tiling(ps(1, 2), ps(0, 1), BoxShape(4))  # overlap at 2
    assert not is_valid_tiling(ps(1, 2), ps(0,), BoxShape(4))  # gap
    assert not is_valid_tiling(ps(1, 2), ps(0, 3), BoxShape(4))  # leaves C
    A = PointSet([(1, 1), (1, 2)])
    B = PointSet([(0, 0), (1, 0), (2, 0)])
    assert is_valid_tiling(A, B, BoxShape(3, 2))


def test_canonical_form():
    assert is_canonical(ps(0, 2))
    assert not is_canonical(ps(1, 3))
    assert not is_canonical(PointSet([(0, 1), (1, 0)]))
    t = canonicalize(ps(3, 4), ps(-2, 0))
    assert (t.A.ints(), t.B.ints()) == ((1, 2), (0, 2))
    with pytest.raises(NonCanonicalizableError):
        canonicalize(PointSet([(1, 1), (2, 1)]), PointSet([(0, 1), (1, 0)]))
    with pytest.raises(TilingError):
        interval_tiling((1, 2), (1, 3), 4)


def test_compare_tilings():
    t1 = interval_tiling((1, 2), (0, 2), 4)
    t2 = interval_tiling((1, 3), (0, 1), 4)
    assert compare_tilings(t1, t2) == -1
    assert compare_tilings(t2, t1) == 1
    assert compare_tilings(t1, t1) == 0


def test_decomposition():
    d = segment_rift_decomposition((1, 2, 5, 6, 9, 10), 12)
    assert [tuple(s) for s in d.segments] == [(1, 2), (5, 6), (9, 10)]
    assert [tuple(r) for r in d.interior_rifts] == [(3, 4), (7, 8)]
    assert (d.k_s, d.k_r) == (2, 2) and d.is_uniform()
    d = segment_rift_decomposition((1, 3), 4)
    assert [tuple(r) for r in d.rifts] == [(2,), (4,)]
    d = segment_rift_decomposition((1, 2, 3), 3)
    assert (d.k_s, d.k_r, d.rifts) == (3, 0, ())
    with pytest.raises(TilingError):
        segment_rift_decomposition((2, 3), 4)
    with pytest.raises(TilingError):
        segment_rift_decomposition((1, 5), 4)


def test_meta_points():
    assert meta_points(12, 2, 2) == [range(1, 5), range(5, 9), range(9, 13)]
    assert initial_meta_points((1, 2, 5, 6, 9, 10), 12) == [0, 1, 2]
    assert initial_meta_points((1, 2, 9, 10), 16) == [0, 1]
    assert initial_meta_points((1, 2, 3), 3) == [0]
    with pytest.raises(TilingError):
        initial_meta_points((1, 2, 4), 6)
    with pytest.raises(TilingError):
        meta_points(10, 2, 2)


def test_overlap_examples():
    A, B = ps(1, 2, 5, 6, 9, 10), ps(0, 2)
    assert overlap_check(A, B, BoxShape(12), (0,))
    assert overlap_check(A, B, BoxShape(12), (40,))
    # ({0,1} is not a valid partner) B+1 = {1,2} hits A twice and stays inside C
    assert not overlap_check(A, ps(0, 1), BoxShape(12), (1,))


def test_text_and_json_roundtrip():
    t = interval_tiling((1, 2), (0, 2), 4)
    assert format_tiling(t) == "A={1,2}; B={0,2}; C=box(4)"
    assert parse_tiling(format_tiling(t)) == t
    assert tiling_from_json(tiling_to_json(t)) == t
    t2 = TilingPair(PointSet([(1, 1), (1, 2)]), PointSet([(0, 0), (1, 0), (2, 0)]), BoxShape(3, 2))
    assert format_tiling(t2) == "A={(1,1),(1,2)}; B={(0,0),(1,0),(2,0)}; C=box(3,2)"
    assert parse_tiling(format_tiling(t2)) == t2
    t3 = TilingPair(ps(1), ps(0, 2), ps(1, 3))
    assert parse_tiling(format_tiling(t3)) == t3
    assert tiling_from_json(tiling_to_json(t3)) == t3
    with pytest.raises(TilingError):
        parse_tiling("A=1")


# --- properties -----------------------------------------------------------------

small_tiling = st.integers(1, 40).flatmap(
    lambda n: st.sampled_from(divisors(n)).flatmap(
        lambda a: st.sampled_from(enumerate_interval(a, n))
    )
)


@given(small_tiling, st.integers(-60, 60), st.integers(-60, 60))
def test_translation_invariance(t, m, k):
    A, B = t.A.translate((m,)), t.B.translate((k,))
    assert is_valid_tiling(A, B, t.region.points().translate((m + k,)))
    back = canonicalize(A, B)
    assert back.B == t.B and back.A == t.A.translate((m + k,))


@given(small_tiling)
def test_roles_swap(t):
    # A + B = [n] also reads as B + A; shifting B by 1 and A by -1 is again canonical
    n = t.region.sides[0]
    A2, B2 = t.B.translate((1,)), t.A.translate((-1,))
    assert is_valid_tiling(A2, B2, BoxShape(n))
    assert is_canonical(B2)


@given(small_tiling)
def test_structure(t):
    n = t.region.sides[0]
    d = segment_rift_decomposition(t.A, n)
    assert d.is_uniform()
    if d.rifts:
        assert d.k_r == min(d.rift_lengths())
    M = initial_meta_points(t.A, n)
    w = d.k_s + d.k_r
    assert tuple(m * w + i for m in M for i in range(1, d.k_s + 1)) == t.A.ints()


@given(small_tiling, st.data())
def test_overlap_property(t, data):
    n = t.region.sides[0]
    m = data.draw(st.integers(-n, n))
    assert overlap_check(t.A, t.B, t.region, (m,))


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_overlap_box(x, y, data):
    box = BoxShape(x, y)
    a = data.draw(st.sampled_from(divisors(x * y)))
    t = data.draw(st.sampled_from(enumerate_box_total(a, box)))
    m = (data.draw(st.integers(-x, x)), data.draw(st.integers(-y, y)))
    assert overlap_check(t.A, t.B, box, m)
