"""Formal integer combinations of symbols ``S(lam(1), ..., lam(n))``."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Sequence

from .lr import split_expansion
from .partitions import Partition, straighten

LambdaTuple = tuple[Partition, ...]


def as_tuple(parts: Iterable[Sequence[int]]) -> LambdaTuple:
    return tuple(Partition(p) for p in parts)


def normalize_symbol(seqs: Sequence[Sequence[int]]) -> Optional[tuple[int, LambdaTuple]]:
    """Straighten every slot of ``S(I(1), ..., I(n))``; ``None`` if any slot vanishes."""
    sign = 1
    out = []
    for seq in seqs:
        st = straighten(seq)
        if st is None:
            return None
        sign *= st[0]
        out.append(st[1])
    return sign, tuple(out)


class QuiverPolynomial:
    """An integer linear combination of symbols ``S(lam)`` of a fixed arity.

    Immutable; zero coefficients are never stored and terms are kept sorted,
    so two polynomials are equal exactly when their term lists agree.
    """

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[Sequence[int]], int] = (), arity: Optional[int] = None):
        clean: dict[LambdaTuple, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = as_tuple(key)
            if arity is None:
                arity = len(key)
            elif len(key) != arity:
                raise ValueError(f"term {key} has arity {len(key)}, expected {arity}")
            if c:
                clean[key] = clean.get(key, 0) + c
        if arity is None:
            raise ValueError("arity required for the zero polynomial")
        self.arity = arity
        self._terms = tuple(sorted((k, c) for k, c in clean.items() if c))
        self._hash = None

    @classmethod
    def symbol(cls, *slots: Sequence[int], coeff: int = 1) -> "QuiverPolynomial":
        return cls({as_tuple(slots): coeff}, arity=len(slots))

    @classmethod
    def zero(cls, arity: int) -> "QuiverPolynomial":
        return cls({}, arity=arity)

    def terms(self) -> dict[LambdaTuple, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> int:
        return dict(self._terms).get(as_tuple(key), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuiverPolynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, self._terms))
        return self._hash

    def _check(self, other: "QuiverPolynomial"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "QuiverPolynomial") -> "QuiverPolynomial":
        self._check(other)
        return QuiverPolynomial(list(self._terms) + list(other._terms), arity=self.arity)

    def __neg__(self) -> "QuiverPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "QuiverPolynomial") -> "QuiverPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "QuiverPolynomial":
        return QuiverPolynomial([(k, c * v) for k, v in self._terms], arity=self.arity)

    __rmul__ = scale

    def substitute(self, position: int,
                   rule: Callable[[Partition], Mapping[Sequence[Sequence[int]], int]],
                   new_width: Optional[int] = None) -> "QuiverPolynomial":
        """Replace slot ``position`` (0-based) of every symbol by a fragment.

        ``rule(mu)`` maps a partition to ``{replacement_slots: coeff}``; the
        replacement slots (any number of them, each straightened) are spliced
        in where ``mu`` was.  ``new_width`` fixes the fragment length when the
        result may be zero.
        """
        out: dict[LambdaTuple, int] = {}
        arity = None
        for key, c in self._terms:
            for repl, d in rule(key[position]).items():
                norm = normalize_symbol(repl)
                if arity is None:
                    arity = self.arity - 1 + len(repl)
                if norm is None:
                    continue
                sign, slots = norm
                new_key = key[:position] + slots + key[position + 1:]
                out[new_key] = out.get(new_key, 0) + sign * c * d
        if arity is None:
            arity = self.arity - 1 + (new_width if new_width is not None else 1)
        return QuiverPolynomial(out, arity=arity)

    def split_slot(self, position: int) -> "QuiverPolynomial":
        """Expand slot ``position`` by the coproduct ``s_mu -> sum c s_sigma (x) s_tau``."""
        return self.substitute(position, split_expansion, new_width=2)

    def __str__(self) -> str:
        return format_terms(self)

    def __repr__(self) -> str:
        return f"QuiverPolynomial({dict(self._terms)!r}, arity={self.arity})"


def format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def format_terms(poly: QuiverPolynomial) -> str:
    """One term per line: ``<coeff> (<parts>) ... (<parts>)``, canonical order."""
    lines = []
    for key, c in poly.items():
        lines.append(" ".join([str(c)] + [format_partition(p) for p in key]))
    return "\n".join(lines)


def parse_terms(text: str, arity: Optional[int] = None) -> QuiverPolynomial:
    """Inverse of :func:`format_terms`."""
    terms = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        coeff, _, rest = line.partition(" ")
        slots = []
        for chunk in rest.split():
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"bad slot {chunk!r} in line {line!r}")
            inner = chunk[1:-1]
            slots.append(Partition(int(x) for x in inner.split(",")) if inner else Partition())
        terms.append((tuple(slots), int(coeff)))
    if arity is None and terms:
        arity = len(terms[0][0])
    return QuiverPolynomial(terms, arity=arity)
