"""Littlewood-Richardson coefficients by enumeration of LR skew tableaux."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .partitions import Partition, partitions_of, subpartitions


def lr_fillings(outer: Partition, inner: Partition,
                content: Optional[Sequence[int]] = None) -> Iterator[dict]:
    """Yield the LR fillings of the skew shape ``outer / inner``.

    A filling is a dict ``{(row, col): value}`` that is weakly increasing
    along rows, strictly increasing down columns, and whose reverse reading
    word (rows top to bottom, each right to left) is a lattice word.  When
    ``content`` is given only fillings with that content are produced.
    """
    if not outer.contains(inner):
        return
    target = list(content) if content is not None else None
    if target is not None and sum(target) != outer.size - inner.size:
        return
    rows = [(r, inner.part(r), outer[r]) for r in range(len(outer))]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)

    def place(ri: int, col: int):
        if ri == len(rows):
            yield dict(filling)
            return
        r, lo, hi = rows[ri]
        if col < lo:
            yield from place(ri + 1, rows[ri + 1][2] - 1 if ri + 1 < len(rows) else 0)
            return
        # row filled right to left; the cell to the right bounds us above
        cap = filling.get((r, col + 1), r + 1)
        above = filling.get((r - 1, col), 0) if r > 0 and col >= inner.part(r - 1) else 0
        for v in range(above + 1, min(cap, r + 1) + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if target is not None and (v > len(target) or counts[v] >= target[v - 1]):
                continue
            filling[(r, col)] = v
            counts[v] += 1
            yield from place(ri, col - 1)
            counts[v] -= 1
            del filling[(r, col)]

    if not rows:
        yield {}
        return
    yield from place(0, rows[0][2] - 1)


def _content_of(filling: dict) -> Partition:
    c = Counter(filling.values())
    return Partition(c[v] for v in range(1, len(c) + 1))


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, sigma: Partition, tau: Partition) -> int:
    """``c^lam_{sigma, tau}``: the multiplicity of ``s_lam`` in ``s_sigma * s_tau``."""
    lam, sigma, tau = Partition(lam), Partition(sigma), Partition(tau)
    if sigma.size + tau.size != lam.size or not lam.contains(sigma) \
            or not lam.contains(tau):
        return 0
    return sum(1 for _ in lr_fillings(lam, sigma, tau))


@lru_cache(maxsize=None)
def _split_items(mu: Partition) -> tuple[tuple[tuple[Partition, Partition], int], ...]:
    table: Counter = Counter()
    for sigma in subpartitions(mu):
        for filling in lr_fillings(mu, sigma):
            table[(sigma, _content_of(filling))] += 1
    return tuple(sorted(table.items()))


def split_expansion(mu: Sequence[int]) -> dict[tuple[Partition, Partition], int]:
    """All ``(sigma, tau)`` with ``c^mu_{sigma,tau} > 0``, mapped to that coefficient.

    This is the coproduct of ``s_mu``: the expansion of ``s_mu(E3 - E1)`` in
    products ``s_sigma(E2 - E1) s_tau(E3 - E2)``.
    """
    return dict(_split_items(Partition(mu)))


@lru_cache(maxsize=None)
def _product_items(sigma: Partition, tau: Partition) -> tuple[tuple[Partition, int], ...]:
    table: Counter = Counter()
    # s_sigma * s_tau = sum over LR fillings of lam / sigma with content tau
    n = sigma.size + tau.size
    for lam in partitions_of(n):
        if lam.contains(sigma) and lam.contains(tau):
            c = lr_coefficient(lam, sigma, tau)
            if c:
                table[lam] = c
    return tuple(sorted(table.items()))


def schur_product(sigma: Sequence[int], tau: Sequence[int]) -> dict[Partition, int]:
    """Expansion of ``s_sigma * s_tau`` in the Schur basis."""
    return dict(_product_items(Partition(sigma), Partition(tau)))
