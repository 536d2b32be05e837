"""Explicit enumeration of T(alpha, [n]) by the block-expansion construction.

A tiling of [n] with first segment ``k_s`` and first rift ``k_r`` is obtained
from a tiling of ``[n / (k_s + k_r)]`` by tiles of size ``alpha / k_s`` (first
segment at least 2): each tile point ``m`` becomes the first ``k_s`` points of
block ``m`` and each translation ``b`` becomes ``b * w + {0, k_s, ..., k_r}``.

Tilings come out already ordered by the tile order (lexicographic on A):
larger ``k_s`` first, then smaller ``k_r``, then the sub-tiling order, since
the expansion is monotone.
"""
from __future__ import annotations

from itertools import islice
from typing import Iterator

from .core import BoxShape, PointSet, TilingError, TilingPair, segment_rift_decomposition
from .counting import rift_options
from .numtheory import divisors

DEFAULT_LIMIT = 10**6

Raw = tuple[tuple[int, ...], tuple[int, ...]]


def _expand(sa: tuple[int, ...], sb: tuple[int, ...], k_s: int, k_r: int) -> Raw:
    w = k_s + k_r
    A = tuple(x for m in sa for x in range((m - 1) * w + 1, (m - 1) * w + k_s + 1))
    step = tuple(range(0, k_r + 1, k_s))
    B = tuple(b * w + s for b in sb for s in step)
    return A, B


def _generate(alpha: int, n: int) -> Iterator[Raw]:
    if n % alpha:
        return
    beta = n // alpha
    for k_s in reversed(divisors(alpha)):
        if k_s == alpha:
            yield tuple(range(1, alpha + 1)), tuple(range(0, n, alpha))
            continue
        for k_r in rift_options(k_s, alpha, beta):
            for sa, sb in _generate(alpha // k_s, n // (k_s + k_r)):
                if sa[1] == 2:
                    yield _expand(sa, sb, k_s, k_r)


def _pair(raw: Raw, n: int) -> TilingPair:
    A, B = raw
    return TilingPair(PointSet(((a,) for a in A), 1), PointSet(((b,) for b in B), 1), BoxShape(n))


def expand_tiling(sub: TilingPair, k_s: int, k_r: int, *, strict: bool = True) -> TilingPair:
    """Blow ``sub`` (a tiling of [m]) up to a tiling of [m * (k_s + k_r)].

    With ``strict`` (the default) the sub-tiling must have first segment of
    size >= 2, which is exactly when the result has first rift ``k_r``.
    """
    if k_s < 1 or k_r < 1 or k_r % k_s:
        raise TilingError(f"need k_s | k_r with k_r > 0, got k_s={k_s}, k_r={k_r}")
    if sub.A.dim != 1:
        raise TilingError("expansion is one-dimensional")
    if isinstance(sub.region, BoxShape):
        m = sub.region.sides[0]
    else:
        m = max(sub.A.ints()) + max(sub.B.ints())
    sa = sub.A.ints()
    if strict and segment_rift_decomposition(sa, m).k_s < 2:
        raise TilingError("sub-tiling has first segment of size 1")
    return _pair(_expand(sa, sub.B.ints(), k_s, k_r), m * (k_s + k_r))


def iter_interval(alpha: int, n: int) -> Iterator[TilingPair]:
    """Yield T(alpha, [n]) in increasing tile order."""
    if alpha < 1 or n < 1:
        raise ValueError("alpha and n must be positive")
    for raw in _generate(alpha, n):
        yield _pair(raw, n)


def enumerate_interval(alpha: int, n: int, limit: int | None = None) -> list[TilingPair]:
    """All of T(alpha, [n]) in order; at most ``limit`` of them if given."""
    return list(islice(iter_interval(alpha, n), limit))


def enumerate_capped(alpha: int, n: int, limit: int = DEFAULT_LIMIT) -> tuple[list[TilingPair], bool]:
    """The first ``limit`` tilings and whether the listing was cut short."""
    got = list(islice(iter_interval(alpha, n), limit + 1))
    return got[:limit], len(got) > limit


def tile_sets(alpha: int, n: int) -> list[tuple[int, ...]]:
    """Just the tiles, as int tuples; cheaper than building TilingPairs."""
    return [A for A, _ in _generate(alpha, n)]
