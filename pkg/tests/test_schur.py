"""Numeric Schur evaluation and the split, factorization and Gysin identities."""

import random
from fractions import Fraction
from itertools import product

import pytest

from quiverlocus.lr import split_expansion
from quiverlocus.partitions import Partition, Rectangle, partitions_up_to
from quiverlocus.polynomial import MultiPolynomial
from quiverlocus.schur import (eval_schur_difference, gysin_rewrite, h_series, schur_x_over_y)

SEED = 20260314


def _bialternant(lam, xs):
    """Classical ``a_{lam+delta} / a_delta`` for distinct integer ``xs``."""
    n = len(xs)
    lam = list(lam) + [0] * (n - len(lam))
    if len(lam) > n:
        return 0

    def vandermonde(exps):
        from quiverlocus.schur import determinant
        return determinant([[Fraction(x) ** e for e in exps] for x in xs], Fraction(1), Fraction(0))

    num = vandermonde([lam[k] + n - 1 - k for k in range(n)])
    den = vandermonde([n - 1 - k for k in range(n)])
    return num / den


@pytest.mark.parametrize("lam, xs, ys, expected", [
    ((), [5, 7], [2], 1),
    ((1,), [3], [1], 2),
    ((1, 1), [2], [], 0),
])
def test_eval_examples(lam, xs, ys, expected):
    assert eval_schur_difference(lam, xs, ys) == expected


def test_h_series_by_direct_division():
    # (1 - 2t)/(1 - 3t)(1 + t) as a power series
    xs, ys = [3, -1], [2]
    series = h_series(xs, ys, 6)
    # multiply back by the denominator and compare with the numerator
    den = [1, -2, -3]  # (1 - 3t)(1 + t)
    num = [sum(den[i] * series[k - i] for i in range(3) if k - i >= 0) for k in range(7)]
    assert num == [1, -2, 0, 0, 0, 0, 0]


def test_eval_matches_bialternant():
    rng = random.Random(SEED)
    for lam in partitions_up_to(5):
        xs = rng.sample(range(-6, 7), 3)
        assert eval_schur_difference(lam, xs, []) == _bialternant(lam, xs)


def _random_roots(rng):
    return [rng.randint(-4, 4) for _ in range(rng.randint(0, 3))]


def test_split_lemma_numerically():
    rng = random.Random(SEED)
    for mu in partitions_up_to(4):
        for _ in range(20):
            e1, e2, e3 = _random_roots(rng), _random_roots(rng), _random_roots(rng)
            lhs = eval_schur_difference(mu, e3, e1)
            rhs = sum(c * eval_schur_difference(s, e2, e1) * eval_schur_difference(t, e3, e2)
                      for (s, t), c in split_expansion(mu).items())
            assert lhs == rhs


def test_factorization_lemma_numerically():
    # F has f roots and E has e roots, so s_R(F - E) is the resultant for R = e^f
    rng = random.Random(SEED + 1)
    for e, f in product(range(1, 4), repeat=2):
        R = Rectangle(e, f)
        for lam in partitions_up_to(4):
            if lam.length > f:
                continue
            for _ in range(3):
                fs = [rng.randint(-4, 4) for _ in range(f)]
                es = [rng.randint(-4, 4) for _ in range(e)]
                glued = [e + lam.part(k) for k in range(f)]
                assert (eval_schur_difference(lam, fs, []) * eval_schur_difference(R.partition, fs, es)
                        == eval_schur_difference(glued, fs, es))


def test_resultant_form_of_rectangle():
    # s_{e^f}(F - E) = prod (x_i - y_j) when rank F = f and rank E = e
    rng = random.Random(SEED + 2)
    for e, f in product(range(1, 4), repeat=2):
        fs = [rng.randint(-5, 5) for _ in range(f)]
        es = [rng.randint(-5, 5) for _ in range(e)]
        prod = 1
        for x in fs:
            for y in es:
                prod *= x - y
        assert eval_schur_difference(Rectangle(e, f).partition, fs, es) == prod


@pytest.mark.parametrize("rect, lam, mu, expected", [
    (Rectangle(1, 1), (), (), (1, Partition((1,)))),
    (Rectangle(1, 1), (1,), (1,), (1, Partition((2, 1)))),
    (Rectangle(0, 1), (), (2,), (-1, Partition((1, 1)))),
])
def test_gysin_examples(rect, lam, mu, expected):
    wider = Rectangle(rect.width + 1, rect.height)
    assert gysin_rewrite(rect, wider, lam, mu) == expected


def test_gysin_rejects_long_lambda():
    with pytest.raises(ValueError):
        gysin_rewrite(Rectangle(1, 1), Rectangle(2, 1), (1, 1), ())


def test_gysin_size_invariant():
    for w, h in product(range(3), repeat=2):
        R = Rectangle(w, h)
        for lam in partitions_up_to(3):
            if lam.length > h:
                continue
            for mu in partitions_up_to(3):
                out = gysin_rewrite(R, Rectangle(w + 1, h), lam, mu)
                if out is not None:
                    assert out[1].size == R.area + lam.size + mu.size


def test_schur_x_over_y_single_variable_row():
    m = 2
    x1 = MultiPolynomial.var(m, "x", 1)
    x2 = MultiPolynomial.var(m, "x", 2)
    assert schur_x_over_y((2,), m, double=False) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert schur_x_over_y((1, 1), m, double=False) == x1 * x2
    assert schur_x_over_y((1, 1, 1), m, double=False) == 0
