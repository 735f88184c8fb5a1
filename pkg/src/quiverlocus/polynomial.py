"""Sparse integer polynomials in ``x_1..x_m, y_1..y_m``."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Exponent = tuple[int, ...]


class MultiPolynomial:
    """Exact polynomial with integer coefficients in ``2m`` variables.

    Exponent tuples list ``x_1, ..., x_m`` first, then ``y_1, ..., y_m``.
    Instances are immutable and never store zero coefficients.
    """

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Union[Mapping[Exponent, int], Iterable] = ()):
        self.m = m
        out: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != 2 * m:
                raise ValueError(f"exponent {exp} does not have {2 * m} entries")
            out[exp] = out.get(exp, 0) + c
        self._terms = {e: c for e, c in out.items() if c}

    # construction ----------------------------------------------------------

    @classmethod
    def constant(cls, m: int, c: int) -> "MultiPolynomial":
        return cls(m, {(0,) * (2 * m): c})

    @classmethod
    def var(cls, m: int, name: str, index: int) -> "MultiPolynomial":
        """The variable ``x_index`` or ``y_index`` (1-based)."""
        if not 1 <= index <= m:
            raise ValueError(f"variable index {index} out of range 1..{m}")
        offset = {"x": 0, "y": m}[name]
        exp = [0] * (2 * m)
        exp[offset + index - 1] = 1
        return cls(m, {tuple(exp): 1})

    def _lift(self, other) -> "MultiPolynomial":
        if isinstance(other, MultiPolynomial):
            if other.m != self.m:
                raise ValueError(f"ring mismatch: m={self.m} vs m={other.m}")
            return other
        if isinstance(other, int):
            return MultiPolynomial.constant(self.m, other)
        return NotImplemented

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPolynomial(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolynomial(self.m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPolynomial(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPolynomial.constant(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPolynomial.constant(self.m, other)
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self):
        return hash((self.m, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # structure -------------------------------------------------------------

    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exp: Exponent) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def set_y_zero(self) -> "MultiPolynomial":
        m = self.m
        return MultiPolynomial(m, {e: c for e, c in self._terms.items()
                                   if not any(e[m:])})

    def swap_x(self, i: int) -> "MultiPolynomial":
        """Exchange ``x_i`` and ``x_{i+1}`` (1-based)."""
        a, b = i - 1, i
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return MultiPolynomial(self.m, out)

    def exact_divide_difference(self, i: int) -> "MultiPolynomial":
        """Quotient by ``x_i - x_{i+1}``; raises ``ArithmeticError`` on a remainder.

        Long division in ``x_i``: the leading ``x_i``-power of the dividend is
        cleared one step at a time, each step adding ``x_i^(d-1) * rest`` to the
        quotient and ``x_{i+1} * x_i^(d-1) * rest`` back to the dividend.
        """
        a, b = i - 1, i
        work = dict(self._terms)
        quotient: dict[Exponent, int] = {}
        while True:
            lead = [e for e in work if e[a] > 0]
            if not lead:
                break
            d = max(e[a] for e in lead)
            for e in [e for e in lead if e[a] == d]:
                c = work.pop(e)
                q = list(e)
                q[a] -= 1
                q = tuple(q)
                quotient[q] = quotient.get(q, 0) + c
                back = list(q)
                back[b] += 1
                back = tuple(back)
                work[back] = work.get(back, 0) + c
                if work[back] == 0:
                    del work[back]
        if any(work.values()):
            raise ArithmeticError(
                f"x{i} - x{i + 1} does not divide the polynomial; remainder {work}")
        return MultiPolynomial(self.m, quotient)

    def divided_difference(self, i: int) -> "MultiPolynomial":
        return (self - self.swap_x(i)).exact_divide_difference(i)

    def change_ring(self, m: int) -> "MultiPolynomial":
        """The same polynomial with ``m`` x- and y-variables; dropped ones must be absent."""
        out = {}
        for e, c in self._terms.items():
            xs, ys = list(e[:self.m]), list(e[self.m:])
            if m < self.m and (any(xs[m:]) or any(ys[m:])):
                raise ValueError(f"monomial {self.monomial_name(e)} needs more than {m} variables")
            pad = [0] * max(0, m - self.m)
            out[tuple(xs[:m] + pad + ys[:m] + pad)] = c
        return MultiPolynomial(m, out)

    def evaluate(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        point = list(xs) + list(ys)
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term *= v ** k
            total += term
        return total

    # display ---------------------------------------------------------------

    def monomial_name(self, exp: Exponent) -> str:
        m = self.m
        names = [f"x{k + 1}" for k in range(m)] + [f"y{k + 1}" for k in range(m)]
        factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k]
        return " ".join(factors)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms by decreasing total degree, then decreasing exponent tuple."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def format_lines(self) -> list[str]:
        if not self._terms:
            return ["0"]
        lines = []
        for e, c in self.sorted_terms():
            mono = self.monomial_name(e)
            lines.append(f"{c} {mono}" if mono else f"{c}")
        return lines

    def __str__(self) -> str:
        return "\n".join(self.format_lines())

    def __repr__(self) -> str:
        return f"MultiPolynomial(m={self.m}, {self._terms!r})"
