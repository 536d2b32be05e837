"""Lattice point sets, tilings and the one-dimensional segment/rift structure.

A tiling of a finite region ``C`` is a pair ``(A, B)`` with ``A + B = C`` as an
exact cover (every point of ``C`` is hit exactly once).  Tilings are only ever
considered up to translation, so they are stored in canonical form: ``B``
contains the origin and every coordinate of every translation is >= 0.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterable, Union

Point = tuple[int, ...]


class TilingError(ValueError):
    """Raised for malformed tilings or inputs outside an operation's domain."""


class NonCanonicalizableError(TilingError):
    """No translate of the tiling puts the origin in B with all minima at 0."""


def _as_point(p) -> Point:
    if isinstance(p, int):
        return (p,)
    return tuple(int(x) for x in p)


@dataclass(frozen=True)
class PointSet:
    """An immutable finite set of points of Z^dim, stored sorted."""

    points: tuple[Point, ...]
    dim: int

    def __init__(self, points: Iterable = (), dim: int | None = None):
        pts = sorted({_as_point(p) for p in points})
        if dim is None:
            if not pts:
                raise TilingError("dimension of an empty point set must be given")
            dim = len(pts[0])
        if dim < 1:
            raise TilingError("dimension must be positive")
        if any(len(p) != dim for p in pts):
            raise TilingError("all points must have the same arity")
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "dim", dim)

    @classmethod
    def interval(cls, n: int, start: int = 1) -> PointSet:
        return cls(((x,) for x in range(start, start + n)), dim=1)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return _as_point(p) in self._set

    @cached_property
    def _set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def as_set(self) -> frozenset[Point]:
        return self._set

    def ints(self) -> tuple[int, ...]:
        """Coordinates of a one-dimensional set as plain ints."""
        if self.dim != 1:
            raise TilingError("ints() is only defined for dim 1")
        return tuple(p[0] for p in self.points)

    def translate(self, m) -> PointSet:
        m = _as_point(m)
        return PointSet((tuple(a + b for a, b in zip(p, m)) for p in self.points), self.dim)

    def mins(self) -> Point:
        return tuple(min(p[i] for p in self.points) for i in range(self.dim))

    def projection(self, i: int) -> frozenset[int]:
        return frozenset(p[i] for p in self.points)

    def __repr__(self) -> str:
        if self.dim == 1:
            return f"PointSet({list(self.ints())})"
        return f"PointSet({list(self.points)})"


@dataclass(frozen=True)
class BoxShape:
    """The contiguous region [x1] x ... x [xd], coordinates starting at 1."""

    sides: tuple[int, ...]

    def __init__(self, *sides):
        if len(sides) == 1 and not isinstance(sides[0], int):
            sides = tuple(sides[0])
        sides = tuple(int(x) for x in sides)
        if not sides or any(x < 1 for x in sides):
            raise TilingError(f"box sides must be positive, got {sides}")
        object.__setattr__(self, "sides", sides)

    @property
    def dim(self) -> int:
        return len(self.sides)

    @property
    def size(self) -> int:
        return prod(self.sides)

    def points(self) -> PointSet:
        return PointSet(product(*(range(1, x + 1) for x in self.sides)), self.dim)

    def __repr__(self) -> str:
        return f"box({','.join(map(str, self.sides))})"


Region = Union[BoxShape, PointSet]


def region_points(region: Region) -> PointSet:
    return region.points() if isinstance(region, BoxShape) else region


@dataclass(frozen=True)
class TilingPair:
    """A canonical tiling ``(A, B)`` of ``region``.

    Construction checks the canonical conditions only; full validity is
    ``is_valid_tiling(t.A, t.B, t.region)``.
    """

    A: PointSet
    B: PointSet
    region: Region = field(compare=True)

    def __post_init__(self):
        if self.A.dim != self.B.dim:
            raise TilingError("A and B differ in dimension")
        if not is_canonical(self.B):
            raise TilingError(f"translations {self.B!r} are not in canonical position")

    @property
    def alpha(self) -> int:
        return len(self.A)

    @property
    def beta(self) -> int:
        return len(self.B)

    def to_text(self) -> str:
        return format_tiling(self)

    def to_json(self) -> dict:
        return tiling_to_json(self)


def _check_dims(A: PointSet, B: PointSet) -> None:
    if A.dim != B.dim:
        raise TilingError(f"dimension mismatch: {A.dim} != {B.dim}")


def minkowski_sum(A: PointSet, B: PointSet) -> PointSet:
    _check_dims(A, B)
    return PointSet(
        (tuple(x + y for x, y in zip(a, b)) for a in A for b in B), A.dim
    )


def is_valid_tiling(A: PointSet, B: PointSet, C: Region) -> bool:
    """True iff A + B = C with no point of C covered twice."""
    C = region_points(C)
    if A.dim != B.dim or A.dim != C.dim:
        return False
    if len(A) * len(B) != len(C):
        return False
    seen = set()
    target = C.as_set()
    for a in A:
        for b in B:
            s = tuple(x + y for x, y in zip(a, b))
            if s in seen or s not in target:
                return False
            seen.add(s)
    return True


def is_canonical(B: PointSet) -> bool:
    origin = (0,) * B.dim
    return origin in B and all(m == 0 for m in B.mins())


def canonicalize(A: PointSet, B: PointSet, region: Region | None = None) -> TilingPair:
    """Translate ``(A, B)`` to its canonical representative."""
    _check_dims(A, B)
    m = B.mins()
    A2, B2 = A.translate(m), B.translate(tuple(-x for x in m))
    if (0,) * B.dim not in B2:
        raise NonCanonicalizableError(
            "origin not in B after shifting every coordinate minimum to 0"
        )
    if region is None:
        region = minkowski_sum(A2, B2)
    return TilingPair(A2, B2, region)


def compare_tilings(t1: TilingPair, t2: TilingPair) -> int:
    """-1, 0 or 1: T < T' iff min(A \\ A') < min(A' \\ A)."""
    a1, a2 = t1.A.as_set(), t2.A.as_set()
    if a1 == a2:
        return 0
    d1, d2 = a1 - a2, a2 - a1
    if not d2:
        return -1
    if not d1:
        return 1
    return -1 if min(d1) < min(d2) else 1


def overlap_check(A: PointSet, B: PointSet, C: Region, m) -> bool:
    """Either B+m meets A in exactly one point, or B+m leaves C."""
    C = region_points(C)
    shifted = B.translate(m)
    if sum(1 for p in shifted if p in A) == 1:
        return True
    return sum(1 for p in shifted if p in C) < len(B)


# --- one-dimensional structure -------------------------------------------


@dataclass(frozen=True)
class SegmentDecomposition:
    """Maximal runs of A (segments) and of [n] \\ A after 1 (rifts).

    A gap after the last segment counts as a final rift.
    """

    segments: tuple[range, ...]
    rifts: tuple[range, ...]

    @property
    def k_s(self) -> int:
        return len(self.segments[0])

    @property
    def k_r(self) -> int:
        return len(self.rifts[0]) if self.rifts else 0

    def is_uniform(self) -> bool:
        """All segments have size k_s and all rift lengths are multiples of it."""
        k = self.k_s
        return all(len(s) == k for s in self.segments) and all(
            len(r) % k == 0 for r in self.rifts
        )

    @property
    def interior_rifts(self) -> tuple[range, ...]:
        """Rifts lying between two segments (the trailing gap excluded)."""
        return self.rifts[: len(self.segments) - 1]

    def rift_lengths(self) -> set[int]:
        return {len(r) for r in self.rifts}


def _runs(sorted_ints: list[int]) -> list[range]:
    runs = []
    start = prev = sorted_ints[0]
    for x in sorted_ints[1:]:
        if x != prev + 1:
            runs.append(range(start, prev + 1))
            start = x
        prev = x
    runs.append(range(start, prev + 1))
    return runs


def segment_rift_decomposition(A: PointSet | Iterable[int], n: int) -> SegmentDecomposition:
    xs = sorted(A.ints() if isinstance(A, PointSet) else A)
    if not xs or xs[0] != 1:
        raise TilingError("tile must contain 1 as its minimum")
    if xs[-1] > n:
        raise TilingError(f"tile is not contained in [{n}]")
    in_a = set(xs)
    segments = _runs(xs)
    gaps = [x for x in range(1, n + 1) if x not in in_a]
    rifts = _runs(gaps) if gaps else []
    return SegmentDecomposition(tuple(segments), tuple(rifts))


def meta_points(n: int, k_s: int, k_r: int) -> list[range]:
    """Blocks [(x-1)w+1, xw] of [n] for block width w = k_s + k_r."""
    w = k_s + k_r
    if w < 1 or n % w:
        raise TilingError(f"block size {w} does not divide {n}")
    return [range(i * w + 1, (i + 1) * w + 1) for i in range(n // w)]


def initial_meta_points(A: PointSet | Iterable[int], n: int) -> list[int]:
    """The unique index set M with A = union over m in M of [1, k_s] + m(k_s + k_r).

    Raises TilingError when A has no such representation.
    """
    xs = sorted(A.ints() if isinstance(A, PointSet) else A)
    dec = segment_rift_decomposition(xs, n)
    k_s, k_r = dec.k_s, dec.k_r
    w = k_s + k_r
    if k_r == 0:
        if xs != list(range(1, k_s + 1)):
            raise TilingError("rift-free tile must be an interval")
        return [0]
    M = []
    for seg in dec.segments:
        q, r = divmod(seg.start - 1, w)
        if r or len(seg) != k_s:
            raise TilingError("segment does not start a meta-point")
        M.append(q)
    if n % w or M[-1] >= n // w:
        raise TilingError("meta-point index out of range")
    return M


# --- serialization --------------------------------------------------------


def _fmt_points(P: PointSet) -> str:
    if P.dim == 1:
        return "{" + ",".join(str(x) for x in P.ints()) + "}"
    return "{" + ",".join("(" + ",".join(map(str, p)) + ")" for p in P) + "}"


def _fmt_region(R: Region) -> str:
    if isinstance(R, BoxShape):
        return "box(" + ",".join(map(str, R.sides)) + ")"
    return _fmt_points(R)


def format_tiling(t: TilingPair) -> str:
    return f"A={_fmt_points(t.A)}; B={_fmt_points(t.B)}; C={_fmt_region(t.region)}"


_TEXT_RE = re.compile(r"^\s*A=(\{.*?\});\s*B=(\{.*?\});\s*C=(.+?)\s*$")


def _parse_points(s: str) -> PointSet:
    body = s.strip()[1:-1].strip()
    if "(" in body:
        pts = [tuple(int(v) for v in g.split(",")) for g in re.findall(r"\(([^)]*)\)", body)]
        return PointSet(pts)
    return PointSet(((int(v),) for v in body.split(",") if v.strip()), dim=1)


def parse_tiling(text: str) -> TilingPair:
    m = _TEXT_RE.match(text)
    if not m:
        raise TilingError(f"cannot parse tiling: {text!r}")
    A, B = _parse_points(m.group(1)), _parse_points(m.group(2))
    c = m.group(3)
    if c.startswith("box("):
        region: Region = BoxShape(int(v) for v in c[4:-1].split(","))
    else:
        region = _parse_points(c)
    return TilingPair(A, B, region)


def tiling_to_json(t: TilingPair) -> dict:
    if isinstance(t.region, BoxShape):
        c = {"box": list(t.region.sides)}
    else:
        c = {"points": [list(p) for p in t.region]}
    return {"A": [list(p) for p in t.A], "B": [list(p) for p in t.B], "C": c}


def tiling_from_json(obj: dict | str) -> TilingPair:
    if isinstance(obj, str):
        obj = json.loads(obj)
    A, B = PointSet(obj["A"]), PointSet(obj["B"])
    c = obj["C"]
    region: Region = BoxShape(c["box"]) if "box" in c else PointSet(c["points"])
    return TilingPair(A, B, region)


def interval_tiling(A: Iterable[int], B: Iterable[int], n: int) -> TilingPair:
    """Shorthand for a canonical tiling of [n] given plain int coordinates."""
    return TilingPair(
        PointSet(((a,) for a in A), dim=1), PointSet(((b,) for b in B), dim=1), BoxShape(n)
    )
