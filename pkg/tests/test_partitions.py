from itertools import product

import pytest

from quiverlocus.partitions import (EMPTY, Partition, Rectangle, attach, partitions_of,
                                    straighten, straighten_by_moves, subpartitions)
from quiverlocus.schur import determinant


def test_partition_normalizes_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition(()) == EMPTY
    assert Partition((2, 2)).size == 4 and Partition((2, 2)).length == 2


def test_partition_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_conjugate():
    assert Partition((3, 1)).conjugate() == (2, 1, 1)
    assert Partition(()).conjugate() == ()
    for lam in partitions_of(6):
        assert lam.conjugate().conjugate() == lam


def test_partition_counts():
    # p(n) for n = 0..8
    assert [len(list(partitions_of(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_subpartitions_are_contained():
    lam = Partition((3, 2))
    subs = subpartitions(lam)
    assert len(subs) == 9  # mu_1 = 0..3 with mu_2 <= min(mu_1, 2)
    assert all(lam.contains(mu) for mu in subs)


def test_rectangle_basics():
    R = Rectangle(2, 3)
    assert R.area == 6 and R.partition == (2, 2, 2)
    assert Rectangle(0, 4).is_empty and Rectangle(0, 4).partition == ()
    assert str(Rectangle(1, 3)) == "1x3"


@pytest.mark.parametrize("rect, sigma, tau, expected", [
    (Rectangle(2, 1), (1,), (1,), (3, 1)),
    (Rectangle(0, 0), (), (2, 1), (2, 1)),
    (Rectangle(1, 2), (), (3,), (1, 1, 3)),
])
def test_attach_examples(rect, sigma, tau, expected):
    assert attach(rect, sigma, tau) == expected


def test_attach_rejects_long_sigma():
    with pytest.raises(ValueError):
        attach(Rectangle(1, 1), (1, 1), ())


@pytest.mark.parametrize("seq, expected", [
    ((2, 1), (1, (2, 1))),
    ((1, 2), None),
    ((0, 2), (-1, (1, 1))),
])
def test_straighten_examples(seq, expected):
    assert straighten(seq) == expected
    assert straighten_by_moves(seq) == expected


def test_straighten_agrees_with_moves_exhaustively():
    for length in range(5):
        for seq in product(range(7), repeat=length):
            assert straighten(seq) == straighten_by_moves(seq), seq


def _h_det(seq):
    """Jacobi-Trudi in formal h's: a dict from sorted h-index tuples to coefficients."""
    def h(k):
        if k < 0:
            return {}
        return {(k,) if k else (): 1}

    def mul(a, b):
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = tuple(sorted(ka + kb))
                out[key] = out.get(key, 0) + ca * cb
        return {k: c for k, c in out.items() if c}

    def add(a, b):
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    class Ring:
        def __init__(self, d):
            self.d = d

        def __add__(self, o):
            return Ring(add(self.d, o.d))

        def __sub__(self, o):
            return Ring(add(self.d, {k: -c for k, c in o.d.items()}))

        def __mul__(self, o):
            return Ring(mul(self.d, o.d))

        def __neg__(self):
            return Ring({k: -c for k, c in self.d.items()})

    p = len(seq)
    matrix = [[Ring(h(seq[i] + j - i)) for j in range(p)] for i in range(p)]
    return determinant(matrix, Ring({(): 1}), Ring({})).d


def test_straighten_matches_jacobi_trudi_determinant():
    # the determinant of a sequence equals sign times the determinant of its partition
    for seq in product(range(4), repeat=3):
        got = straighten(seq)
        det = _h_det(seq)
        if got is None:
            assert det == {}
        else:
            sign, lam = got
            assert det == {k: sign * c for k, c in _h_det(tuple(lam) + (0,) * (3 - len(lam))).items()}
