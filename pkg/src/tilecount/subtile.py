"""Tilings of tiles: compressing an interval tiling back to [alpha].

A tile A of [n] with first segment k_s and first rift k_r is a union of the
first k_s points of some blocks of width w = k_s + k_r.  Dropping the k_r
trailing points of every block (``compress_points``) turns A into a set with
fewer distinct gap lengths, and carries any tiling of A along with it.
Repeating until the ambient tiling is ([alpha], {0}) maps T(alpha', A)
injectively into T(alpha', [alpha]).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    BoxShape,
    PointSet,
    TilingError,
    TilingPair,
    is_valid_tiling,
    segment_rift_decomposition,
)
from .counting import count_full
from .enumeration import enumerate_interval
from .oracle import brute_force_tilings


def _ints(X) -> tuple[int, ...]:
    return X.ints() if isinstance(X, PointSet) else tuple(sorted(X))


def _pointset(xs: Iterable[int]) -> PointSet:
    return PointSet(((x,) for x in xs), dim=1)


def first_pair(A, n: int) -> tuple[int, int]:
    """(k_s, k_r) of A inside [n]; a gap after the last segment counts as a rift."""
    dec = segment_rift_decomposition(_ints(A), n)
    return dec.k_s, dec.k_r


def compress_points(X, k_s: int, k_r: int) -> PointSet:
    """Map x to x - k_r * floor(x / (k_s + k_r)).

    On points lying in the first k_s positions of their block (and on block
    starts for translations) this closes up every gap of width k_r.
    """
    if k_s < 1 or k_r < 1 or k_r % k_s:
        raise TilingError(f"need k_s | k_r with k_r > 0, got ({k_s}, {k_r})")
    w = k_s + k_r
    return _pointset(x - k_r * (x // w) for x in _ints(X))


def b_tilde(B, k_s: int, k_r: int) -> PointSet:
    """Every (k_r/k_s + 1)-th translation, starting from the smallest."""
    if k_r == 0:
        raise TilingError("b_tilde needs a non-empty first rift")
    if k_r % k_s:
        raise TilingError(f"k_s={k_s} does not divide k_r={k_r}")
    stride = k_r // k_s + 1
    return _pointset(_ints(B)[::stride])


def g1(A, B, n: int) -> TilingPair:
    """Compress a tiling of [n] to a tiling of [n k_s / (k_s + k_r)]."""
    A, B = _ints(A), _ints(B)
    k_s, k_r = first_pair(A, n)
    if k_r == 0:
        raise TilingError("tiling has no rift; nothing to compress")
    w = k_s + k_r
    A2 = compress_points(A, k_s, k_r)
    B2 = compress_points(b_tilde(B, k_s, k_r), k_s, k_r)
    m = n * k_s // w
    out = TilingPair(A2, B2, BoxShape(m))
    if not is_valid_tiling(out.A, out.B, out.region):
        raise TilingError(f"compression of {A} in [{n}] is not a tiling of [{m}]")
    return out


def g2(tile_a, tile_b, ambient_a, n: int) -> TilingPair:
    """Carry a tiling of ``ambient_a`` through one compression of ``ambient_a``."""
    ta, tb, amb = _pointset(_ints(tile_a)), _pointset(_ints(tile_b)), _pointset(_ints(ambient_a))
    if not is_valid_tiling(ta, tb, amb):
        raise TilingError("(tile_a, tile_b) does not tile the ambient set")
    k_s, k_r = first_pair(amb, n)
    if k_r == 0:
        raise TilingError("ambient tile has no rift; nothing to compress")
    region = compress_points(amb, k_s, k_r)
    out = TilingPair(compress_points(ta, k_s, k_r), compress_points(tb, k_s, k_r), region)
    if not is_valid_tiling(out.A, out.B, region):
        raise TilingError("compressed pair is not a tiling of the compressed ambient set")
    return out


def g3(tile_a, tile_b, ambient_a, B, n: int) -> TilingPair:
    """Apply g2 until the ambient tiling becomes ([alpha], {0}); returns a tiling of [alpha]."""
    amb, amb_b = _ints(ambient_a), _ints(B)
    ta, tb = _ints(tile_a), _ints(tile_b)
    alpha = len(amb)
    while n != alpha:
        nxt = g2(ta, tb, amb, n)
        ta, tb = nxt.A.ints(), nxt.B.ints()
        ambient = g1(amb, amb_b, n)
        amb, amb_b, n = ambient.A.ints(), ambient.B.ints(), ambient.region.sides[0]
    return TilingPair(_pointset(ta), _pointset(tb), BoxShape(alpha))


def g1_orbit(A, B, n: int) -> list[TilingPair]:
    """The sequence of g1 images down to ([alpha], {0})."""
    A, B = _ints(A), _ints(B)
    out = []
    while n != len(A):
        t = g1(A, B, n)
        out.append(t)
        A, B, n = t.A.ints(), t.B.ints(), t.region.sides[0]
    return out


def translations_for(A, n: int) -> tuple[int, ...]:
    """The unique B with A + B = [n], or TilingError if A does not tile [n]."""
    A = _ints(A)
    if not A or A[0] != 1:
        raise TilingError("tile must start at 1")
    covered = bytearray(n + 2)
    B = []
    x = 1
    while x <= n:
        if covered[x]:
            x += 1
            continue
        b = x - 1
        for a in A:
            y = a + b
            if y > n or covered[y]:
                raise TilingError(f"{A} does not tile [{n}]")
            covered[y] = 1
        B.append(b)
    return tuple(B)


@dataclass(frozen=True)
class SubtileReport:
    alpha_prime: int
    ambient: tuple[int, ...]
    n: int
    oracle_count: int
    bound: int
    injective: bool
    images_valid: bool

    @property
    def holds(self) -> bool:
        return self.oracle_count <= self.bound and self.injective and self.images_valid


def subtile_bound_check(alpha_prime: int, ambient_a, n: int, B=None) -> SubtileReport:
    """Count tilings of the tile ``ambient_a`` by the oracle and check they
    inject into T(alpha', [alpha]) under g3."""
    amb = _ints(ambient_a)
    B = _ints(B) if B is not None else translations_for(amb, n)
    if not is_valid_tiling(_pointset(amb), _pointset(B), BoxShape(n)):
        raise TilingError("ambient pair does not tile [n]")
    alpha = len(amb)
    tilings = brute_force_tilings(alpha_prime, _pointset(amb))
    bound = count_full(alpha_prime, alpha)
    target = {t.A.ints(): t.B.ints() for t in enumerate_interval(alpha_prime, alpha)}
    images = [g3(t.A, t.B, amb, B, n) for t in tilings]
    keys = [(t.A.ints(), t.B.ints()) for t in images]
    valid = all(target.get(a) == b for a, b in keys)
    return SubtileReport(alpha_prime, amb, n, len(tilings), bound, len(set(keys)) == len(keys), valid)


@dataclass(frozen=True)
class ProductSubtileReport:
    """Oracle tilings of a box tile, grouped by the projection sizes of their tiles."""

    tile: PointSet
    alpha_prime: int
    by_profile: dict[tuple[int, ...], tuple[int, int]]  # profile -> (count, bound)
    unmatched: int

    @property
    def holds(self) -> bool:
        return self.unmatched == 0 and all(c <= b for c, b in self.by_profile.values())


def product_subtile_check(tile: PointSet, alpha_prime: int) -> ProductSubtileReport:
    """Check tilings of a product tile against the box of its projection sizes."""
    from .multidim import count_box_profile, profiles

    sides = BoxShape(*(len(tile.projection(i)) for i in range(tile.dim)))
    found: dict[tuple[int, ...], int] = {}
    for t in brute_force_tilings(alpha_prime, tile):
        key = tuple(len(t.A.projection(i)) for i in range(tile.dim))
        found[key] = found.get(key, 0) + 1
    by_profile = {p: (found.pop(p, 0), count_box_profile(p, sides)) for p in profiles(alpha_prime, sides)}
    return ProductSubtileReport(tile, alpha_prime, by_profile, sum(found.values()))
