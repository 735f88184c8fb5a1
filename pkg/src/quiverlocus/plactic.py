"""Semistandard tableaux and the plactic monoid.

The product ``P * Q`` is computed by jeu de taquin on the skew tableau with
``Q`` placed north-east of ``P``; row insertion of the reading word of ``Q``
into ``P`` is kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .partitions import Partition


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    """A semistandard Young tableau, rows listed top to bottom."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for r, row in enumerate(rows):
            if not row:
                raise TableauError("empty row")
            if any(v < 1 for v in row):
                raise TableauError(f"entries must be positive: {row}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise TableauError(f"row {r} is not weakly increasing: {row}")
            if r:
                above = rows[r - 1]
                if len(row) > len(above):
                    raise TableauError("row lengths must weakly decrease")
                if any(above[c] >= row[c] for c in range(len(row))):
                    raise TableauError(f"column strictness fails between rows {r - 1} and {r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "Tableau":
        """Row-insert ``word`` into the empty tableau."""
        rows: list[list[int]] = []
        for x in word:
            _row_insert(rows, x)
        return cls.from_rows(rows)

    @classmethod
    def row_constant(cls, rect_width: int, rect_height: int, start: int) -> "Tableau":
        if rect_width == 0 or rect_height == 0:
            return EMPTY_TABLEAU
        return cls.from_rows([[start + t] * rect_width for t in range(rect_height)])

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def __bool__(self) -> bool:
        return bool(self.rows)

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def reading_word(self) -> tuple[int, ...]:
        """Rows from bottom to top, each left to right."""
        return tuple(v for row in reversed(self.rows) for v in row)

    def conjugate(self) -> "Tableau":
        """Transpose; semistandard only when entries are distinct."""
        if not self.rows:
            return self
        cols = [[row[c] for row in self.rows if c < len(row)] for c in range(len(self.rows[0]))]
        return Tableau.from_rows(cols)

    def __mul__(self, other: "Tableau") -> "Tableau":
        return jdt_product(self, other)

    def __str__(self) -> str:
        return format_tableau(self)


EMPTY_TABLEAU = Tableau()


def format_tableau(t: Tableau) -> str:
    """Rows top to bottom, entries separated by spaces; the empty tableau is ``-``."""
    if not t.rows:
        return "-"
    return "\n".join(" ".join(str(v) for v in row) for row in t.rows)


def parse_tableau(text: str) -> Tableau:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if lines == ["-"]:
        return EMPTY_TABLEAU
    return Tableau.from_rows([int(v) for v in ln.split()] for ln in lines)


# row insertion ----------------------------------------------------------------

def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted-insert ``x`` in place; returns the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return r, lo
        row[lo], x = x, row[lo]
        r += 1


def _reverse_bump(rows: list[list[int]], r: int) -> int:
    """Undo an insertion that ended at the last cell of row ``r``; returns the ejected letter."""
    x = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for k in range(r - 1, -1, -1):
        row = rows[k]
        # rightmost entry strictly smaller than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        pos = lo - 1
        row[pos], x = x, row[pos]
    return x


def insertion_product(p: Tableau, q: Tableau) -> Tableau:
    """``P * Q`` by row-inserting the reading word of ``Q`` into ``P``."""
    rows = [list(row) for row in p.rows]
    for x in q.reading_word():
        _row_insert(rows, x)
    return Tableau.from_rows(rows)


# jeu de taquin ------------------------------------------------------------------

def _jdt_rectify(cells: dict[tuple[int, int], int], inner: list[int]) -> Tableau:
    """Rectify a skew tableau ``{(row, col): value}`` with inner shape ``inner``."""
    inner = list(inner)
    while any(inner):
        # an inner corner: last box of a row of the inner shape whose row below is shorter
        r = max(k for k in range(len(inner)) if inner[k] and
                (k + 1 == len(inner) or inner[k + 1] < inner[k]))
        c = inner[r] - 1
        inner[r] -= 1
        hole = (r, c)
        while True:
            right = cells.get((hole[0], hole[1] + 1))
            below = cells.get((hole[0] + 1, hole[1]))
            if right is None and below is None:
                break
            if right is None or (below is not None and below <= right):
                src = (hole[0] + 1, hole[1])
            else:
                src = (hole[0], hole[1] + 1)
            cells[hole] = cells.pop(src)
            hole = src
    if not cells:
        return EMPTY_TABLEAU
    nrows = max(r for r, _ in cells) + 1
    rows = [[cells[(r, c)] for c in range(sum(1 for (rr, _) in cells if rr == r))]
            for r in range(nrows)]
    return Tableau.from_rows(row for row in rows if row)


def jdt_product(p: Tableau, q: Tableau) -> Tableau:
    """``P * Q``: put ``Q`` north-east of ``P`` corner to corner and slide inward."""
    if not p:
        return q
    if not q:
        return p
    width = len(p.rows[0])
    hq = len(q.rows)
    cells = {}
    for r, row in enumerate(q.rows):
        for c, v in enumerate(row):
            cells[(r, width + c)] = v
    for r, row in enumerate(p.rows):
        for c, v in enumerate(row):
            cells[(hq + r, c)] = v
    inner = [width] * hq
    return _jdt_rectify(cells, inner)


def product(*tableaux: Tableau) -> Tableau:
    out = EMPTY_TABLEAU
    for t in tableaux:
        out = jdt_product(out, t)
    return out


# factorization ------------------------------------------------------------------

def _is_tableau_word(word: Sequence[int]) -> int:
    """Length of the maximal prefix-consistent check; returns -1 if ``word`` is not
    the reading word of a tableau, else the number of rows."""
    rows = []
    start = 0
    for k in range(1, len(word) + 1):
        if k == len(word) or word[k] < word[k - 1]:
            rows.append(word[start:k])
            start = k
    rows.reverse()
    for a, b in zip(rows, rows[1:]):
        if len(b) > len(a) or any(a[c] >= b[c] for c in range(len(b))):
            return -1
    return len(rows)


def factorizations(t: Tableau) -> dict[tuple[Partition, Partition], list[tuple[Tableau, Tableau]]]:
    """Every pair ``(P, Q)`` with ``P * Q = T``, keyed by ``(shape P, shape Q)``."""
    out: dict[tuple[Partition, Partition], list[tuple[Tableau, Tableau]]] = {}
    for p, q in _factor_pairs(t):
        out.setdefault((p.shape, q.shape), []).append((p, q))
    return out


@lru_cache(maxsize=None)
def _factor_pairs(t: Tableau) -> tuple[tuple[Tableau, Tableau], ...]:
    """Reverse row insertion from ``T`` along every removal order.

    Inserting the reading word of ``Q`` into ``P`` gives ``T``; undoing the
    insertions cell by cell (any sequence of outer-corner removals) recovers
    ``P`` and the inserted word, and the pair is kept when that word is the
    reading word of a tableau.  Distinct removal orders give distinct pairs.
    """
    results = []
    rows = [list(row) for row in t.rows]
    ejected: list[int] = []

    def emit():
        word = tuple(reversed(ejected))
        if _is_tableau_word(word) < 0:
            return
        results.append((Tableau.from_rows(rows), _tableau_from_reading_word(word)))

    def consistent() -> bool:
        # letters come out as the rows of Q from the top, each right to left,
        # so rows are separated by strict increases.  Only finished rows can
        # be checked, plus the length of the row in progress.
        segs = [[ejected[0]]] if ejected else []
        for a, b in zip(ejected, ejected[1:]):
            if b <= a:
                segs[-1].append(b)
            else:
                segs.append([b])
        for upper, lower_ in zip(segs, segs[1:]):
            if len(lower_) > len(upper):
                return False
        for upper, lower_ in zip(segs, segs[1:-1]):
            up, lo = upper[::-1], lower_[::-1]
            if any(up[c] >= lo[c] for c in range(len(lo))):
                return False
        return True

    def rec():
        emit()
        for r in range(len(rows)):
            if r + 1 < len(rows) and len(rows[r + 1]) == len(rows[r]):
                continue
            saved = [list(row) for row in rows]
            x = _reverse_bump(rows, r)
            ejected.append(x)
            if consistent():
                rec()
            ejected.pop()
            rows[:] = saved

    rec()
    return tuple(results)


def _tableau_from_reading_word(word: Sequence[int]) -> Tableau:
    rows = []
    start = 0
    for k in range(1, len(word) + 1):
        if k == len(word) or word[k] < word[k - 1]:
            rows.append(list(word[start:k]))
            start = k
    rows.reverse()
    return Tableau.from_rows(rows)


def factorization_count(t: Tableau, sigma: Sequence[int], tau: Sequence[int]) -> int:
    return len(factorizations(t).get((Partition(sigma), Partition(tau)), []))


def factorizations_brute_force(t: Tableau) -> dict[tuple[Partition, Partition], list[tuple[Tableau, Tableau]]]:
    """All ``(P, Q)`` with ``P * Q = T`` by trying every pair of tableaux on
    complementary sub-multisets of the entries of ``T``.  Exponential; tests only."""
    from collections import Counter
    from itertools import product as cartesian

    content = Counter(t.entries())
    letters = sorted(content)
    out: dict = {}
    for counts in cartesian(*[range(content[v] + 1) for v in letters]):
        sub = Counter({v: k for v, k in zip(letters, counts) if k})
        rest = content - sub
        for p in tableaux_with_content(sub):
            for q in tableaux_with_content(rest):
                if jdt_product(p, q) == t:
                    out.setdefault((p.shape, q.shape), []).append((p, q))
    return out


def tableaux_with_content(content) -> list[Tableau]:
    """Every semistandard tableau whose multiset of entries is ``content``."""
    letters = sorted(v for v in content if content[v])
    out = [[]]
    # add letters in increasing order; each value forms a horizontal strip
    for v in letters:
        nxt = []
        for rows in out:
            for strip in _horizontal_strips([len(r) for r in rows], content[v]):
                new = [list(r) for r in rows]
                for r, k in enumerate(strip):
                    if k:
                        if r == len(new):
                            new.append([])
                        new[r].extend([v] * k)
                nxt.append(new)
        out = nxt
    return [Tableau.from_rows(rows) for rows in out]


def _horizontal_strips(shape: list[int], k: int) -> Iterator[list[int]]:
    """Ways to add ``k`` boxes to ``shape``, no two in one column."""
    shape = list(shape) + [0]

    def rec(r, left):
        if r == len(shape):
            if left == 0:
                yield []
            return
        cap = left if r == 0 else min(left, shape[r - 1] - shape[r])
        for a in range(cap, -1, -1):
            for rest in rec(r + 1, left - a):
                yield [a] + rest

    yield from rec(0, k)


def all_tableaux(max_boxes: int, alphabet: int) -> list[Tableau]:
    """Every semistandard tableau with at most ``max_boxes`` boxes over ``1..alphabet``."""
    from collections import Counter
    from itertools import product as cartesian

    out = []
    for counts in cartesian(range(max_boxes + 1), repeat=alphabet):
        if sum(counts) <= max_boxes:
            out.extend(tableaux_with_content(Counter({v + 1: k for v, k in enumerate(counts)})))
    return out


def superstandard(shape: Sequence[int]) -> Tableau:
    """Row ``t`` filled with ``t``."""
    return Tableau.from_rows([[t + 1] * p for t, p in enumerate(shape)])
