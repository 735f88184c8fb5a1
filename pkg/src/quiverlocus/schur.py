"""Schur determinants of bundle differences, numeric and symbolic.

``s_lam(F - E) = det(h_{lam_i + j - i})`` where ``sum_k h_k t^k`` is
``prod(1 - y t) / prod(1 - x t)`` over the Chern roots ``x`` of ``F`` and
``y`` of ``E``.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence, TypeVar

from .partitions import Partition, Rectangle, attach, straighten
from .polynomial import MultiPolynomial

R = TypeVar("R")


def determinant(matrix: Sequence[Sequence[R]], one: R, zero: R) -> R:
    """Cofactor expansion along the first row; fine for the small sizes used here."""
    n = len(matrix)
    if n == 0:
        return one
    if n == 1:
        return matrix[0][0]
    total = zero
    for col in range(n):
        entry = matrix[0][col]
        if not entry:
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * determinant(minor, one, zero)
        total = total + term if col % 2 == 0 else total - term
    return total


def jacobi_trudi(seq: Sequence[int], h: Callable[[int], R], one: R, zero: R) -> R:
    """``det(h_{seq_i + j - i})`` with ``h_0 = 1`` and ``h_k = 0`` for ``k < 0``."""
    p = len(seq)

    def entry(i, j):
        k = seq[i] + j - i
        if k < 0:
            return zero
        return h(k)

    return determinant([[entry(i, j) for j in range(p)] for i in range(p)], one, zero)


def h_series(xs: Sequence[int], ys: Sequence[int], degree: int) -> list[int]:
    """Coefficients ``h_0..h_degree`` of ``prod(1 - y t) / prod(1 - x t)``."""
    series = [1] + [0] * degree
    for x in xs:
        # multiply by 1 / (1 - x t): running sum
        for k in range(1, degree + 1):
            series[k] += x * series[k - 1]
    for y in ys:
        for k in range(degree, 0, -1):
            series[k] -= y * series[k - 1]
    return series


def eval_schur_difference(lam: Sequence[int], xs: Sequence[int], ys: Sequence[int]) -> int:
    """Exact value of ``s_lam(F - E)`` at integer Chern roots ``xs`` of F and ``ys`` of E.

    ``lam`` may be any sequence of non-negative integers, not only a partition.
    """
    lam = tuple(lam)
    if not lam:
        return 1
    top = max(lam) + len(lam)
    h = h_series(xs, ys, top)
    return jacobi_trudi(lam, lambda k: h[k], 1, 0)


def h_polynomials(m: int, degree: int) -> list[MultiPolynomial]:
    """``h_k(x/y)`` for ``k <= degree``, in the ring on ``x_1..x_m, y_1..y_m``."""
    one = MultiPolynomial.constant(m, 1)
    series = [one] + [MultiPolynomial(m)] * degree
    for i in range(1, m + 1):
        x = MultiPolynomial.var(m, "x", i)
        for k in range(1, degree + 1):
            series[k] = series[k] + x * series[k - 1]
    for i in range(1, m + 1):
        y = MultiPolynomial.var(m, "y", i)
        for k in range(degree, 0, -1):
            series[k] = series[k] - y * series[k - 1]
    return series


def schur_x_over_y(tau: Sequence[int], m: int, double: bool = True) -> MultiPolynomial:
    """``s_tau(x/y)`` expanded into monomials; ``double=False`` sets every ``y`` to 0."""
    tau = tuple(tau)
    one = MultiPolynomial.constant(m, 1)
    if not tau:
        return one
    h = h_polynomials(m, max(tau) + len(tau))
    if not double:
        h = [p.set_y_zero() for p in h]
    return jacobi_trudi(tau, lambda k: h[k], one, MultiPolynomial(m))


def gysin_rewrite(rect: Rectangle, rect_prime: Rectangle, lam: Sequence[int],
                  mu: Sequence[int]) -> Optional[tuple[int, Partition]]:
    """Formal pushforward ``s_{R'+lam}(Q-E) s_mu(A-E) -> s_{R+lam, mu}(F-E)``.

    ``rect`` is ``(e-d)^q`` and ``rect_prime`` is ``e^q``: same height, wider
    by the rank ``d`` of ``A``.  Returns the straightened index sequence.
    """
    if rect_prime.height != rect.height or rect_prime.width < rect.width:
        raise ValueError(f"{rect_prime} is not a widening of {rect}")
    return straighten(attach(rect, lam, mu))
