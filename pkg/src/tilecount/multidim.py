"""Tilings of d-dimensional boxes.

A box [x1] x ... x [xd] is tiled exactly by products A = A1 x ... x Ad,
B = B1 x ... x Bd of interval tilings, so counts factor over the axes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Callable, Iterator

from .core import BoxShape, PointSet, TilingError, TilingPair
from .counting import count_full
from .enumeration import enumerate_interval
from .numtheory import divisors


def _box(box) -> BoxShape:
    return box if isinstance(box, BoxShape) else BoxShape(box)


def count_box_profile(alphas, box, count: Callable[[int, int], int] = count_full) -> int:
    """Tilings whose tile projects to alphas[i] points on axis i."""
    box = _box(box)
    alphas = tuple(alphas)
    if len(alphas) != box.dim:
        raise TilingError(f"profile {alphas} does not match {box!r}")
    return prod(count(a, x) for a, x in zip(alphas, box.sides))


def profiles(alpha: int, box) -> Iterator[tuple[int, ...]]:
    """Ordered tuples (a1, ..., ad) with prod = alpha and a_i | x_i."""
    sides = _box(box).sides

    def split(rest: int, i: int):
        if i == len(sides) - 1:
            if sides[i] % rest == 0:
                yield (rest,)
            return
        for d in divisors(rest):
            if sides[i] % d == 0:
                for tail in split(rest // d, i + 1):
                    yield (d, *tail)

    yield from split(alpha, 0)


def count_box_total(alpha: int, box, count: Callable[[int, int], int] = count_full) -> int:
    return sum(count_box_profile(p, box, count) for p in profiles(alpha, box))


def enumerate_box(alphas, box) -> list[TilingPair]:
    box = _box(box)
    alphas = tuple(alphas)
    if len(alphas) != box.dim:
        raise TilingError(f"profile {alphas} does not match {box!r}")
    axes = [enumerate_interval(a, x) for a, x in zip(alphas, box.sides)]
    out = []
    for choice in product(*axes):
        A = PointSet(product(*(t.A.ints() for t in choice)), box.dim)
        B = PointSet(product(*(t.B.ints() for t in choice)), box.dim)
        out.append(TilingPair(A, B, box))
    return out


def enumerate_box_total(alpha: int, box) -> list[TilingPair]:
    box = _box(box)
    return [t for p in profiles(alpha, box) for t in enumerate_box(p, box)]


@dataclass(frozen=True)
class DcountReport:
    box: BoxShape
    box_max: int
    box_argmax: int
    line_max: int
    line_argmax: int

    @property
    def holds(self) -> bool:
        return self.box_max <= self.line_max


def _argmax(values: dict[int, int]) -> tuple[int, int]:
    best = max(values.values())
    return min(a for a, v in values.items() if v == best), best


def verify_dcount(box) -> DcountReport:
    """Compare the best tile size on a box with the best on an interval of equal size."""
    box = _box(box)
    n = box.size
    a_box, m_box = _argmax({a: count_box_total(a, box) for a in divisors(n)})
    a_line, m_line = _argmax({a: count_full(a, n) for a in divisors(n)})
    return DcountReport(box, m_box, a_box, m_line, a_line)
