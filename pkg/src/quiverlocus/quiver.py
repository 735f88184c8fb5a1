"""Rank conditions for type A quivers and the inductive coefficient algorithm."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping, NamedTuple, Optional, Sequence

from .lr import split_expansion
from .partitions import EMPTY, Partition, Rectangle, attach, straighten, subpartitions
from .symbols import LambdaTuple, QuiverPolynomial


class RankConditionError(ValueError):
    """Raised for malformed or inadmissible rank conditions."""


class Violation(NamedTuple):
    i: int
    j: int
    kind: str
    message: str

    def __str__(self) -> str:
        return f"({self.i},{self.j}): {self.message}"


class RankConditions:
    """The triangular array ``r[i, j]``, ``0 <= i <= j <= n``; ``r[i, i]`` are bundle ranks."""

    __slots__ = ("n", "_r")

    def __init__(self, n: int, r: Mapping[tuple[int, int], int]):
        if n < 0:
            raise RankConditionError("n must be non-negative")
        table = {}
        for i in range(n + 1):
            for j in range(i, n + 1):
                if (i, j) not in r:
                    raise RankConditionError(f"missing entry r[{i},{j}]")
                table[(i, j)] = int(r[(i, j)])
        self.n = n
        self._r = table

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RankConditions":
        """Build from triangle rows: row ``k`` is ``r[0,k], r[1,k+1], ..., r[n-k,n]``."""
        n = len(rows) - 1
        if n < 0:
            raise RankConditionError("at least one row is required")
        r = {}
        for k, row in enumerate(rows):
            if len(row) != n + 1 - k:
                raise RankConditionError(
                    f"row {k} has {len(row)} entries, expected {n + 1 - k}")
            for i, v in enumerate(row):
                r[(i, i + k)] = v
        return cls(n, r)

    @classmethod
    def parse(cls, text: str) -> "RankConditions":
        lines = text.splitlines()
        while lines and not lines[-1].strip():
            lines.pop()
        rows = []
        for ln, line in enumerate(lines):
            if not line.strip():
                raise RankConditionError(f"line {ln + 1}: blank line inside the triangle")
            try:
                rows.append([int(tok) for tok in line.split()])
            except ValueError:
                raise RankConditionError(f"line {ln + 1}: non-integer entry in {line!r}") from None
        return cls.from_rows(rows)

    def format(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows()) + "\n"

    def rows(self) -> list[list[int]]:
        return [[self._r[(i, i + k)] for i in range(self.n + 1 - k)]
                for k in range(self.n + 1)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self._r[ij]

    @property
    def ranks(self) -> list[int]:
        return [self._r[(i, i)] for i in range(self.n + 1)]

    def __eq__(self, other):
        if not isinstance(other, RankConditions):
            return NotImplemented
        return self.n == other.n and self._r == other._r

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._r.items()))))

    def __repr__(self) -> str:
        return f"RankConditions.from_rows({self.rows()})"

    # admissibility ---------------------------------------------------------

    def violations(self) -> Iterator[Violation]:
        r = self._r
        for (i, j), v in sorted(r.items(), key=lambda kv: (kv[0][1] - kv[0][0], kv[0][0])):
            if v < 0:
                yield Violation(i, j, "negative", f"r[{i},{j}] = {v} is negative")
        for d in range(1, self.n + 1):
            for i in range(self.n + 1 - d):
                j = i + d
                if r[(i, j)] > r[(i, j - 1)]:
                    yield Violation(i, j, "row",
                                    f"r[{i},{j}] = {r[(i, j)]} > r[{i},{j - 1}] = {r[(i, j - 1)]}")
                if r[(i, j)] > r[(i + 1, j)]:
                    yield Violation(i, j, "column",
                                    f"r[{i},{j}] = {r[(i, j)]} > r[{i + 1},{j}] = {r[(i + 1, j)]}")
                if d >= 2:
                    q = r[(i + 1, j - 1)] - r[(i, j - 1)] - r[(i + 1, j)] + r[(i, j)]
                    if q < 0:
                        yield Violation(
                            i, j, "quadrilateral",
                            f"r[{i + 1},{j - 1}] - r[{i},{j - 1}] - r[{i + 1},{j}] + r[{i},{j}]"
                            f" = {q} < 0")

    def validate(self) -> tuple[bool, Optional[Violation]]:
        """``(True, None)`` if admissible, else ``(False, first_violation)``."""
        first = next(self.violations(), None)
        return first is None, first

    def is_valid(self) -> bool:
        return self.validate()[0]

    def require_valid(self) -> "RankConditions":
        ok, bad = self.validate()
        if not ok:
            raise RankConditionError(f"inadmissible rank conditions at {bad}")
        return self

    # derived data ----------------------------------------------------------

    def rectangle(self, i: int, j: int) -> Rectangle:
        r = self._r
        return Rectangle(r[(i, j - 1)] - r[(i, j)], r[(i + 1, j)] - r[(i, j)])

    def rectangles(self) -> dict[tuple[int, int], Rectangle]:
        return {(i, j): self.rectangle(i, j)
                for i in range(self.n) for j in range(i + 1, self.n + 1)}

    def rectangle_rows(self) -> tuple[tuple[Rectangle, ...], ...]:
        """Rectangle array by depth: entry ``[d-1][i]`` is ``R[i, i+d]``."""
        return tuple(tuple(self.rectangle(i, i + d) for i in range(self.n + 1 - d))
                     for d in range(1, self.n + 1))

    def codim(self) -> int:
        self.require_valid()
        return sum(R.area for R in self.rectangles().values())

    def shifted(self, c: int) -> "RankConditions":
        return RankConditions(self.n, {k: v + c for k, v in self._r.items()})

    def dual(self) -> "RankConditions":
        """Rank conditions of the dual sequence ``E_n^v -> ... -> E_0^v``."""
        n = self.n
        return RankConditions(n, {(a, b): self._r[(n - b, n - a)]
                                  for a in range(n + 1) for b in range(a, n + 1)})

    def top_row_removed(self) -> "RankConditions":
        return RankConditions(self.n - 1, {(i, j - 1): self._r[(i, j)]
                                           for i in range(self.n) for j in range(i + 1, self.n + 1)})

    # inessential bundles ---------------------------------------------------

    def inessential_indices(self) -> list[int]:
        """Bundles that can be dropped without changing the locus or its formula.

        Both 45-degree lines of rectangles below ``k`` must be empty, and the
        rectangles below them must keep their areas when moved up a row.  The
        second condition is not implied by the first: with ranks ``4, 1, 4`` and
        all other ranks 1 the middle bundle has empty lines, yet omitting it
        turns the automatic bound on the composite into a codimension-9
        condition.  Endpoints have one line and count as long as ``n >= 2``.
        """
        if self.n < 2:
            return []
        out = []
        for k in range(self.n + 1):
            line = [self.rectangle(i, k) for i in range(k)]
            line += [self.rectangle(k, j) for j in range(k + 1, self.n + 1)]
            if all(R.is_empty for R in line) and self._restrict(k).codim() == self.codim():
                out.append(k)
        return out

    def _restrict(self, k: int) -> "RankConditions":
        keep = [i for i in range(self.n + 1) if i != k]
        return RankConditions(self.n - 1, {(a, b): self._r[(keep[a], keep[b])]
                                           for a in range(self.n) for b in range(a, self.n)})

    def omit(self, k: int) -> "RankConditions":
        """Drop the inessential bundle ``E_k``; the maps around it compose."""
        if k not in self.inessential_indices():
            raise RankConditionError(f"bundle {k} is not inessential")
        return self._restrict(k)


def parse_rank_conditions(text: str) -> RankConditions:
    return RankConditions.parse(text)


# the inductive algorithm -------------------------------------------------------

RectRows = tuple[tuple[Rectangle, ...], ...]


def _slot_options(mu: Partition, max_sigma_length: int):
    return [(sigma, tau, c) for (sigma, tau), c in split_expansion(mu).items()
            if len(sigma) <= max_sigma_length]


@lru_cache(maxsize=None)
def coefficients_from_rectangles(rows: RectRows) -> QuiverPolynomial:
    """``sum c_lam S(lam)`` for a rectangle array given by depth rows.

    Deletes the top row, recurses, and expands every ``S(mu)`` of the
    smaller array: each ``mu(i)`` is split as ``c^mu_{sigma,tau}`` with
    ``len(sigma) <= height(R_i)`` and the new slots are
    ``attach(R_i, sigma(i), tau(i-1))``, straightened.
    """
    n = len(rows)
    if n == 0:
        return QuiverPolynomial.symbol()
    top = rows[0]
    lower = coefficients_from_rectangles(rows[1:])
    out: dict[LambdaTuple, int] = {}
    for mu, d in lower.items():
        # left-to-right chain: state is (slots so far, tau carried to the next slot)
        states: dict[tuple[LambdaTuple, Partition], int] = {((), EMPTY): d}
        for i in range(n - 1):
            rect = top[i]
            nxt: dict[tuple[LambdaTuple, Partition], int] = {}
            options = _slot_options(mu[i], rect.height)
            for (prefix, tau_prev), c in states.items():
                for sigma, tau, lr in options:
                    st = straighten(attach(rect, sigma, tau_prev))
                    if st is None:
                        continue
                    key = (prefix + (st[1],), tau)
                    nxt[key] = nxt.get(key, 0) + c * lr * st[0]
            states = nxt
        rect = top[n - 1]
        for (prefix, tau_prev), c in states.items():
            st = straighten(attach(rect, EMPTY, tau_prev))
            if st is None:
                continue
            key = prefix + (st[1],)
            out[key] = out.get(key, 0) + c * st[0]
    return QuiverPolynomial(out, arity=n)


def coefficients(r: RankConditions) -> QuiverPolynomial:
    """The Chern-class formula ``sum c_lam(r) S(lam)`` for the locus of ``r``."""
    r.require_valid()
    return coefficients_from_rectangles(r.rectangle_rows())


def fits_together(sigma: Partition, tau: Partition, rect: Rectangle) -> bool:
    """Whether ``sigma`` and ``tau`` rotated by 180 degrees tile ``rect``."""
    if rect.is_empty:
        return not sigma and not tau
    w, h = rect
    if len(sigma) > h or len(tau) > h:
        return False
    return all(sigma.part(k) + tau.part(h - 1 - k) == w for k in range(h))


def rectangle_splits(rect: Rectangle) -> list[tuple[Partition, Partition]]:
    """All ``(sigma, tau)`` that fit together to form ``rect``."""
    if rect.is_empty:
        return [(EMPTY, EMPTY)]
    w, h = rect
    out = []
    for sigma in subpartitions(rect.partition):
        tau = Partition(w - sigma.part(h - 1 - k) for k in range(h))
        out.append((sigma, tau))
    return out


def is_two_row(r: RankConditions) -> bool:
    return all(R.is_empty for (i, j), R in r.rectangles().items() if j - i > 2)


def coefficients_two_row(r: RankConditions) -> QuiverPolynomial:
    """Closed form when every rectangle below the second row is empty.

    Each ``R[i-1, i+1]`` is cut into ``sigma(i)`` and rotated ``tau(i)``;
    ``lam(i) = attach(R_i, sigma(i), tau(i-1))``, all coefficients 1.
    """
    r.require_valid()
    if not is_two_row(r):
        raise RankConditionError("a rectangle with j - i > 2 is non-empty")
    n = r.n
    if n == 0:
        return QuiverPolynomial.symbol()
    top = [r.rectangle(i - 1, i) for i in range(1, n + 1)]
    mid = [r.rectangle(i - 1, i + 1) for i in range(1, n)]
    out: dict[LambdaTuple, int] = {}

    def rec(i, tau_prev, prefix):
        if i == n:
            lam = attach(top[n - 1], EMPTY, tau_prev)
            out[prefix + (Partition(lam),)] = 1
            return
        for sigma, tau in rectangle_splits(mid[i - 1]):
            lam = Partition(attach(top[i - 1], sigma, tau_prev))
            rec(i + 1, tau, prefix + (lam,))

    rec(1, EMPTY, ())
    return QuiverPolynomial(out, arity=n)


def dual_tuple(lam: Sequence[Partition]) -> LambdaTuple:
    """``(lam(n)', ..., lam(1)')`` with ``'`` the conjugate partition."""
    return tuple(Partition(p).conjugate() for p in reversed(lam))


def dual_polynomial(p: QuiverPolynomial) -> QuiverPolynomial:
    return QuiverPolynomial({dual_tuple(k): c for k, c in p.items()}, arity=p.arity)


def omission_expansion(r: RankConditions, k: int) -> QuiverPolynomial:
    """Coefficients of ``omit(r, k)`` rewritten in the bundles of ``r``."""
    return reinsert_bundle(coefficients(r.omit(k)), k)


def reinsert_bundle(short: QuiverPolynomial, k: int) -> QuiverPolynomial:
    """Rewrite a formula for a sequence with ``E_k`` omitted in the full sequence.

    An interior bundle re-enters through the coproduct on the slot
    ``E_{k+1} - E_{k-1}``; an endpoint contributes an empty slot.
    """
    m = short.arity
    if k == 0:
        return QuiverPolynomial({(EMPTY,) + key: c for key, c in short.items()}, arity=m + 1)
    if k == m + 1:
        return QuiverPolynomial({key + (EMPTY,): c for key, c in short.items()}, arity=m + 1)
    if not 0 < k <= m:
        raise ValueError(f"bundle index {k} out of range for {m} maps")
    return short.split_slot(k - 1)
