"""LR coefficients against numeric Schur products and tableau factorizations."""

import random

import pytest

from quiverlocus.lr import lr_coefficient, schur_product, split_expansion
from quiverlocus.partitions import Partition, Rectangle, partitions_of, partitions_up_to
from quiverlocus.quiver import fits_together, rectangle_splits
from quiverlocus.schur import eval_schur_difference

P = Partition


@pytest.mark.parametrize("lam, sigma, tau, expected", [
    ((2, 1), (1,), (1, 1), 1),
    ((2, 2), (2,), (1, 1), 0),
    ((2, 2), (2,), (2,), 1),
    ((3, 2, 1), (2, 1), (2, 1), 2),
    ((2, 1), (1,), (2,), 1),
    ((1,), (1,), (1,), 0),
])
def test_lr_examples(lam, sigma, tau, expected):
    assert lr_coefficient(P(lam), P(sigma), P(tau)) == expected


def test_split_expansion_examples():
    assert split_expansion(()) == {(P(()), P(())): 1}
    assert split_expansion((1,)) == {(P((1,)), P(())): 1, (P(()), P((1,))): 1}
    assert split_expansion((2, 1)) == {
        (P((2, 1)), P(())): 1, (P((2,)), P((1,))): 1, (P((1, 1)), P((1,))): 1,
        (P((1,)), P((2,))): 1, (P((1,)), P((1, 1))): 1, (P(()), P((2, 1))): 1}


def test_split_keys_have_matching_weight():
    for mu in partitions_up_to(6):
        for (s, t), c in split_expansion(mu).items():
            assert s.size + t.size == mu.size and c > 0


def test_symmetry():
    for n in range(7):
        for lam in partitions_of(n):
            for (s, t), c in split_expansion(lam).items():
                assert lr_coefficient(lam, t, s) == c


def test_products_match_numeric_evaluation():
    # s_sigma * s_tau at integer points, against the determinant on the same points
    rng = random.Random(11)
    shapes = [p for p in partitions_up_to(4) if p]
    for _ in range(40):
        s, t = rng.choice(shapes), rng.choice(shapes)
        xs = [rng.randint(-3, 4) for _ in range(4)]
        ys = [rng.randint(-3, 4) for _ in range(2)]
        lhs = eval_schur_difference(s, xs, ys) * eval_schur_difference(t, xs, ys)
        rhs = sum(c * eval_schur_difference(lam, xs, ys) for lam, c in schur_product(s, t).items())
        assert lhs == rhs, (s, t)


def test_product_weight_and_conjugation():
    for s in partitions_up_to(3):
        for t in partitions_up_to(3):
            prod = schur_product(s, t)
            assert all(lam.size == s.size + t.size for lam in prod)
            conj = schur_product(s.conjugate(), t.conjugate())
            assert conj == {lam.conjugate(): c for lam, c in prod.items()}


def test_rectangle_law():
    for w in range(4):
        for h in range(4):
            R = Rectangle(w, h)
            splits = set(rectangle_splits(R))
            for (s, t), c in split_expansion(R.partition).items():
                assert c == 1
                assert (s, t) in splits
            assert len(splits) == len(split_expansion(R.partition))
            for s, t in splits:
                assert fits_together(s, t, R)
