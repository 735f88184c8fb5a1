"""Partitions, index sequences, rectangles and the straightening law."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value.  Comparison and hashing are
    inherited from ``tuple``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if type(parts) is cls:
            return parts
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for k, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"invalid part {p!r} in {parts}")
            if k and p > parts[k - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, k: int) -> int:
        """The k-th part (0-based), zero beyond the length."""
        return self[k] if k < len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        """Whether the diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, p in enumerate(self):
            for c in range(p):
                yield r, c


EMPTY = Partition()


def partitions_of(n: int, max_part: Optional[int] = None,
                  max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - p, p, slots - 1):
                yield (p,) + rest

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def subpartitions(lam: Partition) -> tuple[Partition, ...]:
    """Every partition whose diagram lies inside ``lam``."""
    def rec(k, cap):
        if k == len(lam):
            yield ()
            return
        for p in range(min(cap, lam[k]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(k + 1, p):
                    yield (p,) + rest

    return tuple(Partition(parts) for parts in rec(0, lam[0] if lam else 0))


class Rectangle(NamedTuple):
    """A ``width x height`` box; empty as a diagram when either side is 0.

    Both sides are kept even when the area is zero, because the quiver
    algorithm reads the height of zero-width rectangles.
    """

    width: int
    height: int

    @property
    def area(self) -> int:
        return self.width * self.height

    @property
    def is_empty(self) -> bool:
        return self.area == 0

    @property
    def partition(self) -> Partition:
        if self.is_empty:
            return EMPTY
        return Partition((self.width,) * self.height)

    def transpose(self) -> "Rectangle":
        return Rectangle(self.height, self.width)

    def __str__(self) -> str:
        return f"{self.width}x{self.height}"


def attach(rect: Rectangle, sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """The index sequence gluing ``sigma`` to the right of ``rect`` and ``tau`` below it.

    Returns ``(w + sigma_1, ..., w + sigma_h, tau_1, tau_2, ...)`` where ``w``
    and ``h`` are the rectangle's width and height, ``sigma`` padded with zeros.
    """
    if len(sigma) > rect.height:
        raise ValueError(
            f"sigma={tuple(sigma)} has more than {rect.height} rows")
    head = [rect.width + (sigma[k] if k < len(sigma) else 0)
            for k in range(rect.height)]
    return tuple(head) + tuple(tau)


def straighten(seq: Sequence[int]) -> Optional[tuple[int, Partition]]:
    """Normalize the Schur determinant ``s_I`` for an arbitrary index sequence.

    Returns ``None`` when ``s_I`` vanishes, otherwise ``(sign, lam)`` with
    ``s_I = sign * s_lam``.  Uses the closed form: sort ``I_k - k``
    decreasingly; a repeated value means zero, else the sign is that of the
    sorting permutation.
    """
    shifted = [v - k for k, v in enumerate(seq)]
    if len(set(shifted)) < len(shifted):
        return None
    order = sorted(range(len(shifted)), key=lambda k: -shifted[k])
    sign = _permutation_sign(order)
    parts = [shifted[k] + pos for pos, k in enumerate(order)]
    return sign, Partition(parts)


def straighten_by_moves(seq: Sequence[int]) -> Optional[tuple[int, Partition]]:
    """Straighten by the adjacent-swap moves ``(a, b) -> (b - 1, a + 1)``.

    Quadratic; kept as an independent check on :func:`straighten`.
    """
    j = list(seq)
    moves = 0
    while True:
        if any(j[k + 1] == j[k] + 1 for k in range(len(j) - 1)):
            return None
        for k in range(len(j) - 1):
            if j[k + 1] > j[k]:
                j[k], j[k + 1] = j[k + 1] - 1, j[k] + 1
                moves += 1
                break
        else:
            return (-1) ** moves, Partition(j)


def _permutation_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
