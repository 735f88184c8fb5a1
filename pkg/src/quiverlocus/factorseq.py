"""Factor sequences built from a fixed array of rectangular tableaux."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, Rectangle
from .plactic import EMPTY_TABLEAU, Tableau, _factor_pairs, format_tableau, jdt_product, product
from .quiver import RankConditions
from .symbols import LambdaTuple

FactorSequence = tuple[Tableau, ...]


@dataclass(frozen=True)
class TableauArray:
    """Tableau ``T[i, j]`` of shape ``R[i, j]`` for ``0 <= i < j <= n``.

    Rectangles are kept alongside the tableaux because the direct test needs
    the height of a rectangle even when its width is zero.
    """

    n: int
    rects: Mapping[tuple[int, int], Rectangle]
    tableaux: Mapping[tuple[int, int], Tableau]

    def __post_init__(self):
        object.__setattr__(self, "rects", dict(self.rects))
        object.__setattr__(self, "tableaux", dict(self.tableaux))
        for key, rect in self.rects.items():
            t = self.tableaux[key]
            want = rect.partition
            if t.shape != want:
                raise ValueError(f"T{key} has shape {t.shape}, expected {want}")

    def __getitem__(self, ij: tuple[int, int]) -> Tableau:
        return self.tableaux[ij]

    def lower(self) -> "TableauArray":
        """The array of the bottom ``n-1`` rows: ``S[a, b] = T[a, b+1]``."""
        m = self.n - 1
        keys = [(a, b) for a in range(m) for b in range(a + 1, m + 1)]
        return TableauArray(m, {k: self.rects[(k[0], k[1] + 1)] for k in keys},
                            {k: self.tableaux[(k[0], k[1] + 1)] for k in keys})

    def wedge_violations(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Pairs ``((i,j), (k,l))`` with ``(k,l)`` in the wedge below ``(i,j)`` but
        ``max T[i,j] >= min T[k,l]``."""
        bad = []
        for (i, j), t in self.tableaux.items():
            if not t:
                continue
            top = max(t.entries())
            for (k, l), s in self.tableaux.items():
                if (k, l) != (i, j) and k <= i and l >= j and s and min(s.entries()) <= top:
                    bad.append(((i, j), (k, l)))
        return bad

    def is_wedge_compatible(self) -> bool:
        return not self.wedge_violations()


def _by_depth(r: RankConditions):
    rects = r.require_valid().rectangles()
    depths: dict[int, list[tuple[int, int]]] = {}
    for (i, j) in sorted(rects):
        depths.setdefault(j - i, []).append((i, j))
    return rects, depths


def standard_array(r: RankConditions) -> TableauArray:
    """Row-constant filling banded by depth.

    Row ``t`` of ``T[i, j]`` holds ``base(j-i) + t``, where ``base(d)`` sums the
    largest rectangle height at each depth below ``d``.
    """
    rects, depths = _by_depth(r)
    tabs = {}
    base = 0
    for d in sorted(depths):
        for key in depths[d]:
            tabs[key] = Tableau.row_constant(rects[key].width, rects[key].height, base + 1)
        base += max(rects[key].height for key in depths[d])
    return TableauArray(r.n, rects, tabs)


def distinct_array(r: RankConditions) -> TableauArray:
    """Wedge-compatible filling in which no entry repeats.

    Depths are numbered in increasing order; inside one rectangle entries
    increase along rows, row after row.
    """
    rects, depths = _by_depth(r)
    tabs = {}
    nxt = 1
    for d in sorted(depths):
        for key in depths[d]:
            w, h = rects[key]
            if w == 0 or h == 0:
                tabs[key] = EMPTY_TABLEAU
                continue
            tabs[key] = Tableau.from_rows([range(nxt + t * w, nxt + (t + 1) * w) for t in range(h)])
            nxt += w * h
    return TableauArray(r.n, rects, tabs)


def random_array(r: RankConditions, rng) -> TableauArray:
    """A seeded random wedge-compatible filling.

    Rectangles receive consecutive value blocks in a random order compatible
    with the wedge relation; each block is filled either row-constant or with
    distinct entries, chosen at random.
    """
    rects, _ = _by_depth(r)
    pending = [k for k, R in sorted(rects.items()) if not R.is_empty]
    tabs = {k: EMPTY_TABLEAU for k, R in rects.items() if R.is_empty}
    nxt = 1
    while pending:
        # (i, j) may go next once nothing still pending has it in its wedge
        free = [(i, j) for (i, j) in pending
                if not any((k, l) != (i, j) and i <= k and j >= l for (k, l) in pending)]
        key = rng.choice(free)
        pending.remove(key)
        w, h = rects[key]
        if rng.random() < 0.5:
            tabs[key] = Tableau.row_constant(w, h, nxt)
            nxt += h
        else:
            tabs[key] = Tableau.from_rows([range(nxt + t * w, nxt + (t + 1) * w) for t in range(h)])
            nxt += w * h
    return TableauArray(r.n, rects, tabs)


def factor_sequences(arr: TableauArray) -> dict[LambdaTuple, set[FactorSequence]]:
    """Every factor sequence of ``arr``, bucketed by shape tuple."""
    out: dict[LambdaTuple, set[FactorSequence]] = {}
    for seq in _factor_sequence_set(arr):
        out.setdefault(tuple(t.shape for t in seq), set()).add(seq)
    return out


def _factor_sequence_set(arr: TableauArray) -> set[FactorSequence]:
    n = arr.n
    if n == 0:
        return {()}
    result: set[FactorSequence] = set()
    for sub in _factor_sequence_set(arr.lower()):
        # every way of factoring each S_i = P_i * Q_i
        options = [_factor_pairs(s) for s in sub]
        for choice in cartesian(*options):
            ps = [p for p, _ in choice] + [EMPTY_TABLEAU]
            qs = [EMPTY_TABLEAU] + [q for _, q in choice]
            result.add(tuple(product(qs[i], arr[(i, i + 1)], ps[i]) for i in range(n)))
    return result


def factor_sequence_counts(arr: TableauArray) -> dict[LambdaTuple, int]:
    return {shape: len(seqs) for shape, seqs in factor_sequences(arr).items()}


def _split_blocks(t: Tableau, rect: Rectangle):
    """``(block, P, Q)``: the top-left ``rect`` block, the part right of it in its
    rows, and everything below.  ``None`` when ``t`` does not contain ``rect``."""
    w, h = rect
    rows = t.rows
    if w and h and (len(rows) < h or len(rows[h - 1]) < w):
        return None
    block = Tableau.from_rows(row[:w] for row in rows[:h] if w)
    p = Tableau.from_rows(row[w:] for row in rows[:h] if len(row) > w)
    q = Tableau.from_rows(rows[h:])
    return block, p, q


def is_factor_sequence(arr: TableauArray, seq: Sequence[Tableau]) -> bool:
    """The direct test, from the top row down."""
    seq = tuple(seq)
    n = arr.n
    if len(seq) != n:
        return False
    if n == 0:
        return True
    ps, qs = [], []
    for i in range(1, n + 1):
        parts = _split_blocks(seq[i - 1], arr.rects[(i - 1, i)])
        if parts is None:
            return False
        block, p, q = parts
        if block != arr[(i - 1, i)]:
            return False
        ps.append(p)
        qs.append(q)
    if qs[0] or ps[-1]:
        return False
    # Q_{i-1} and P_i came from T_i; rebuild S_i = P_i * Q_i for the lower array
    sub = tuple(jdt_product(ps[i], qs[i + 1]) for i in range(n - 1))
    return is_factor_sequence(arr.lower(), sub)


def candidate_universe(generated: Mapping[LambdaTuple, Iterable[FactorSequence]]) -> list[FactorSequence]:
    """All tuples built slotwise from tableaux seen anywhere in ``generated``."""
    per_slot: list[set[Tableau]] = []
    for seqs in generated.values():
        for seq in seqs:
            while len(per_slot) < len(seq):
                per_slot.append(set())
            for k, t in enumerate(seq):
                per_slot[k].add(t)
    if not per_slot:
        return [()]
    pools = [sorted(s, key=lambda t: t.rows) for s in per_slot]
    return [tuple(c) for c in cartesian(*pools)]


def same_content(arr: TableauArray, seq: Sequence[Tableau]) -> bool:
    want = Counter(v for t in arr.tableaux.values() for v in t.entries())
    have = Counter(v for t in seq for v in t.entries())
    return want == have


def format_sequence(seq: Sequence[Tableau]) -> str:
    """Tableaux of one sequence, separated by lines holding ``|``."""
    return "\n|\n".join(format_tableau(t) for t in seq)


def format_listing(seqs: Iterable[FactorSequence]) -> str:
    """One sequence per block, blocks separated by blank lines."""
    ordered = sorted(seqs, key=lambda s: tuple(t.rows for t in s))
    return "\n\n".join(format_sequence(s) for s in ordered)


def content_universe(arr: TableauArray) -> list[FactorSequence]:
    """Every ``n``-tuple of tableaux whose entries together are those of ``arr``.

    Factor sequences preserve content, so this contains every factor sequence.
    """
    from .plactic import tableaux_with_content

    content = Counter(v for t in arr.tableaux.values() for v in t.entries())
    letters = sorted(content)
    n = arr.n
    # distribute each letter's multiplicity over the n slots
    per_letter = [list(_compositions(content[v], n)) for v in letters]
    out = []
    for split in cartesian(*per_letter):
        slot_contents = [Counter({v: split[a][k] for a, v in enumerate(letters) if split[a][k]})
                         for k in range(n)]
        pools = [tableaux_with_content(c) for c in slot_contents]
        out.extend(tuple(c) for c in cartesian(*pools))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def direct_test_universe(arr: TableauArray, generated: Mapping[LambdaTuple, Iterable[FactorSequence]],
                         max_boxes: int = 7) -> list[FactorSequence]:
    """Candidates for checking the direct test against ``generated``.

    Every content-preserving tuple when the array has at most ``max_boxes``
    boxes, else the slotwise product of tableaux seen in ``generated``.
    """
    if sum(t.size for t in arr.tableaux.values()) <= max_boxes:
        return content_universe(arr)
    return candidate_universe(generated)
