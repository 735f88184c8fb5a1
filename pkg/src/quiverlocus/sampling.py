"""Seeded random and exhaustive generation of admissible rank conditions."""

from __future__ import annotations

import random
from typing import Iterator, Optional

from .quiver import RankConditions

DEFAULT_SEED = 20260314


def instance_rng(seed: int, index: int) -> random.Random:
    """Per-instance generator, a pure function of ``(seed, index)``."""
    return random.Random(f"{seed}:{index}")


def random_rank_conditions(rng: random.Random, n: int, max_entry: int,
                           max_side: Optional[int] = None,
                           max_tries: int = 100_000) -> RankConditions:
    """Rejection sampler.

    Ranks ``e_i`` are uniform on ``1..max_entry``; every deeper entry is
    uniform on ``0..min(r[i,j-1], r[i+1,j])``; the draw is kept only if the
    quadrilateral inequalities hold (and, with ``max_side``, every rectangle
    side is at most that).
    """
    for _ in range(max_tries):
        r = {(i, i): rng.randint(1, max_entry) for i in range(n + 1)}
        for d in range(1, n + 1):
            for i in range(n + 1 - d):
                j = i + d
                r[(i, j)] = rng.randint(0, min(r[(i, j - 1)], r[(i + 1, j)]))
        rc = RankConditions(n, r)
        if not rc.is_valid():
            continue
        if max_side is not None and any(max(R) > max_side for R in rc.rectangles().values()):
            continue
        return rc
    raise RuntimeError("rejection sampling did not produce an admissible instance")


def random_instances(seed: int, count: int, max_n: int, max_entry: int,
                     max_side: Optional[int] = None, min_n: int = 1) -> list[RankConditions]:
    out = []
    for index in range(count):
        rng = instance_rng(seed, index)
        n = rng.randint(min_n, max_n)
        out.append(random_rank_conditions(rng, n, max_entry, max_side=max_side))
    return out


def enumerate_rank_conditions(n: int, max_entry: int, min_rank: int = 0) -> Iterator[RankConditions]:
    """Every admissible array with ranks in ``min_rank..max_entry``."""
    cells = [(i, i + d) for d in range(n + 1) for i in range(n + 1 - d)]
    r: dict[tuple[int, int], int] = {}

    def bounds(i, j):
        if i == j:
            return min_rank, max_entry
        hi = min(r[(i, j - 1)], r[(i + 1, j)])
        lo = 0
        if j - i >= 2:
            lo = max(0, r[(i, j - 1)] + r[(i + 1, j)] - r[(i + 1, j - 1)])
        return lo, hi

    def rec(k):
        if k == len(cells):
            yield RankConditions(n, r)
            return
        i, j = cells[k]
        lo, hi = bounds(i, j)
        for v in range(lo, hi + 1):
            r[(i, j)] = v
            yield from rec(k + 1)
        r.pop((i, j), None)

    yield from rec(0)


def distinct_by_rectangles(instances) -> list[RankConditions]:
    """Keep one instance per rectangle array (the coefficients depend on nothing else)."""
    seen = set()
    out = []
    for rc in instances:
        key = rc.rectangle_rows()
        if key not in seen:
            seen.add(key)
            out.append(rc)
    return out
