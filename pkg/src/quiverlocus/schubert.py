"""Permutation rank conditions and Schubert polynomial specializations.

The bundle sequence is ``G_1 -> ... -> G_m -> F_m -> ... -> F_1`` with
``rank G_q = rank F_q = q``, i.e. ``E_k = G_{k+1}`` for ``k < m`` and
``E_k = F_{2m-k}`` for ``k >= m``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import Partition
from .polynomial import MultiPolynomial
from .quiver import RankConditions, coefficients
from .schur import schur_x_over_y
from .symbols import QuiverPolynomial


class Permutation(tuple):
    """One-line notation ``w(1), ..., w(m+1)`` of a permutation of ``1..m+1``."""

    __slots__ = ()

    def __new__(cls, entries: Sequence[int]) -> "Permutation":
        entries = tuple(int(v) for v in entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"{entries} is not a permutation of 1..{len(entries)}")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Digit string (``3142``) or comma-separated (``3,1,4,2``)."""
        text = text.strip()
        if "," in text:
            return cls(int(t) for t in text.split(","))
        if len(text) > 9:
            raise ValueError("use comma-separated notation beyond 9 letters")
        return cls(int(ch) for ch in text)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(range(1, size + 1))

    @classmethod
    def longest(cls, size: int) -> "Permutation":
        return cls(range(size, 0, -1))

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        return sum(1 for a in range(len(self)) for b in range(a + 1, len(self))
                   if self[a] > self[b])

    def times_simple(self, i: int) -> "Permutation":
        """``w * s_i``: swap positions ``i`` and ``i+1``."""
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(str(v) for v in self)
        return ",".join(str(v) for v in self)


def all_permutations(size: int) -> list[Permutation]:
    from itertools import permutations
    return [Permutation(p) for p in permutations(range(1, size + 1))]


def rank_w(w: Permutation, p: int, q: int) -> int:
    """``#{i <= p : w(i) <= q}``."""
    return sum(1 for i in range(1, p + 1) if w(i) <= q)


def _check(w: Permutation, m: int):
    if len(w) != m + 1:
        raise ValueError(f"{w} is not in S_{m + 1}")


def rank_conditions_from(w: Sequence[int], m: int) -> RankConditions:
    """Rank conditions on the ``2m`` bundles for the permutation ``w`` in ``S_{m+1}``."""
    w = Permutation(w)
    _check(w, m)
    n = 2 * m - 1
    r = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            if j < m:
                r[(i, j)] = i + 1
            elif i >= m:
                r[(i, j)] = 2 * m - j
            else:
                r[(i, j)] = rank_w(w, 2 * m - j, i + 1)
    rc = RankConditions(n, r)
    rc.require_valid()
    return rc


def dprime_criterion(w: Sequence[int], m: int, i: int, j: int) -> bool:
    """Whether the rectangle ``R[i, j]`` is non-empty, read off the diagram ``D'(w)``.

    True exactly when ``w(2m+1-j) <= i+1`` and ``w^{-1}(i+2) <= 2m-j``.
    Positions outside the index range of ``w`` count as failing.
    """
    w = Permutation(w)
    _check(w, m)
    p = 2 * m + 1 - j
    if not (1 <= p <= m + 1 and 1 <= i + 2 <= m + 1):
        return False
    return w(p) <= i + 1 and w.inverse()(i + 2) <= 2 * m - j


@lru_cache(maxsize=None)
def universal_expansion(w: Permutation, m: int) -> QuiverPolynomial:
    return coefficients(rank_conditions_from(w, m))


def specialize(p: QuiverPolynomial, m: int, double: bool = True) -> MultiPolynomial:
    """Substitute the Chern roots of the flag specialization into ``sum c S(lam)``.

    Slots ``1..m-1`` are ``s(G_{k+1} - G_k)``, nonzero only on a row ``(q)``
    where they give ``y_{k+1}^q``; slot ``m`` gives ``s_tau(x/y)``; slot
    ``m+k`` is ``s(F_{m-k} - F_{m-k+1})``, nonzero only on a column ``1^p``
    where it gives ``(-x_{m-k+1})^p``.
    """
    if p.arity != 2 * m - 1:
        raise ValueError(f"arity {p.arity} does not match 2m-1 = {2 * m - 1}")
    total = MultiPolynomial(m)
    for lam, c in p.items():
        mono = MultiPolynomial.constant(m, c)
        for k in range(1, m):
            part = lam[k - 1]
            if len(part) > 1:
                break
            if part:
                if not double:
                    break
                mono = mono * MultiPolynomial.var(m, "y", k + 1) ** part[0]
        else:
            for k in range(1, m):
                part = lam[m + k - 1]
                if part and max(part) > 1:
                    break
                if part:
                    mono = mono * (-MultiPolynomial.var(m, "x", m - k + 1)) ** len(part)
            else:
                total = total + mono * schur_x_over_y(lam[m - 1], m, double=double)
    return total


def specialize_double(p: QuiverPolynomial, m: int) -> MultiPolynomial:
    """Double Schubert polynomial ``S_w(x; y)`` from the universal expansion."""
    return specialize(p, m, double=True)


def specialize_single(p: QuiverPolynomial, m: int) -> MultiPolynomial:
    """Single Schubert polynomial ``S_w(x)``: all ``y`` set to zero."""
    return specialize(p, m, double=False)


def _top_polynomial(m: int, double: bool) -> MultiPolynomial:
    x = lambda i: MultiPolynomial.var(m, "x", i)
    y = lambda i: MultiPolynomial.var(m, "y", i)
    top = MultiPolynomial.constant(m, 1)
    for i in range(1, m + 1):
        for j in range(1, m + 2 - i):
            top = top * ((x(i) - y(j)) if double else x(i))
    return top


def reduced_word_to_longest(w: Permutation, last: bool = False) -> list[int]:
    """Indices ``i_1, ..., i_k`` with ``w0 = w s_{i_1} ... s_{i_k}``, lengths increasing.

    Built by repeatedly stripping ascents of ``w`` (first ascent, or last
    one with ``last=True``).  Then ``S_w = d_{i_1} ... d_{i_k} S_{w0}``.
    """
    word = []
    cur = w
    while True:
        ascents = [i for i in range(1, len(cur)) if cur(i) < cur(i + 1)]
        if not ascents:
            return word
        i = ascents[-1] if last else ascents[0]
        word.append(i)
        cur = cur.times_simple(i)


def schubert_oracle(w: Sequence[int], m: int, double: bool = False,
                    last: bool = False) -> MultiPolynomial:
    """Schubert polynomial by divided differences from the longest element.

    ``S_{w0} = prod_{i+j <= m+1} (x_i - y_j)`` (or ``x_1^m x_2^(m-1) ... x_m``
    when ``double`` is false); ``S_w = d_i S_{w s_i}`` whenever ``w(i) < w(i+1)``.
    """
    w = Permutation(w)
    _check(w, m)
    word = reduced_word_to_longest(w, last=last)
    # d_m involves x_{m+1}, so work one variable up and project at the end
    poly = _top_polynomial(m, double).change_ring(m + 1)
    for i in reversed(word):
        poly = poly.divided_difference(i)
    return poly.change_ring(m)
