"""Brute-force tiling enumeration for arbitrary finite regions of Z^d.

This is the reference the closed-form counts are checked against, so it only
uses the definition of a tiling: grow ``(A, B)`` by always covering the
lexicographically smallest uncovered point ``p``, either by putting ``p`` in the
tile or by a new translation ``p - a`` of an existing tile point ``a``.  In an
exact cover each point has exactly one ``(a, b)`` with ``a + b = p``, so every
canonical tiling is reached along exactly one branch.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .core import BoxShape, PointSet, Region, TilingPair, region_points

DEFAULT_NODE_CAP = 10**8


class WorkCapExceeded(RuntimeError):
    """The search visited more nodes than allowed; this is not 'no tilings'."""


def brute_force_tilings(
    alpha: int, C: Region, *, node_cap: int = DEFAULT_NODE_CAP
) -> list[TilingPair]:
    """All canonical tilings of ``C`` by tiles of size ``alpha``, in search order."""
    if alpha < 1:
        raise ValueError("alpha must be positive")
    region = C
    P = region_points(C)
    size = len(P)
    if size == 0:
        raise ValueError("region must be non-empty")
    if size % alpha:
        return []
    beta = size // alpha
    dim = P.dim
    pts = P.points
    index = {p: i for i, p in enumerate(pts)}
    covered = bytearray(size)
    A: list[tuple[int, ...]] = []
    B: list[tuple[int, ...]] = [(0,) * dim]
    out: list[TilingPair] = []
    nodes = 0

    def add(u, v):
        return tuple(x + y for x, y in zip(u, v))

    def cells(points):
        """Indices of ``points`` if all lie in C and are uncovered, else None."""
        idx = []
        for q in points:
            i = index.get(q)
            if i is None or covered[i]:
                return None
            idx.append(i)
        return idx

    def rec(start: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise WorkCapExceeded(f"oracle exceeded {node_cap} nodes")
        p = start
        while p < size and covered[p]:
            p += 1
        if p == size:
            if len(A) == alpha:
                out.append(TilingPair(PointSet(A, dim), PointSet(B, dim), region))
            return
        pt = pts[p]
        if len(A) < alpha:
            idx = cells(add(pt, b) for b in B)
            if idx is not None:
                for i in idx:
                    covered[i] = 1
                A.append(pt)
                rec(p + 1)
                A.pop()
                for i in idx:
                    covered[i] = 0
        if len(B) < beta:
            for a in list(A):
                b = tuple(x - y for x, y in zip(pt, a))
                if min(b) < 0:
                    continue
                idx = cells(add(x, b) for x in A)
                if idx is None:
                    continue
                for i in idx:
                    covered[i] = 1
                B.append(b)
                rec(p + 1)
                B.pop()
                for i in idx:
                    covered[i] = 0

    limit = sys.getrecursionlimit()
    if size + 100 > limit:
        sys.setrecursionlimit(size + 100)
    try:
        rec(0)
    finally:
        sys.setrecursionlimit(limit)
    return out


def count_tilings(alpha: int, C: Region, *, node_cap: int = DEFAULT_NODE_CAP) -> int:
    return len(brute_force_tilings(alpha, C, node_cap=node_cap))


@dataclass
class ProbeReport:
    alpha: int
    n: int
    window: int
    bound: int
    checked: int = 0
    max_count: int = 0
    argmax_C: list[int] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "violations": self.violations,
                "max_count": self.max_count,
                "argmax_C": self.argmax_C,
                "bound": self.bound,
                "checked": self.checked,
                "alpha": self.alpha,
                "n": self.n,
                "window": self.window,
            }
        )


def conjecture_probe(
    alpha: int, n: int, window: int, *, max_subsets: int = 10**6,
    node_cap: int = DEFAULT_NODE_CAP,
) -> ProbeReport:
    """Count tilings of every C in [window] with |C| = n and 1 in C.

    Any C with more tilings than [n] is recorded as a violation; the caller
    decides what to do with it.
    """
    from .counting import count_full

    if n < 1 or window < n:
        raise ValueError("need 1 <= n <= window")
    work = comb(window - 1, n - 1)
    if work > max_subsets:
        raise WorkCapExceeded(f"{work} subsets exceeds the cap of {max_subsets}")
    bound = count_full(alpha, n)
    report = ProbeReport(alpha, n, window, bound)
    for rest in combinations(range(2, window + 1), n - 1):
        xs = (1, *rest)
        c = count_tilings(alpha, PointSet(((x,) for x in xs), dim=1), node_cap=node_cap)
        report.checked += 1
        if c > report.max_count:
            report.max_count, report.argmax_C = c, list(xs)
        if c > bound:
            report.violations.append({"C": list(xs), "count": c})
    return report


def box_tilings(alpha: int, box: BoxShape, **kw) -> list[TilingPair]:
    return brute_force_tilings(alpha, box, **kw)
