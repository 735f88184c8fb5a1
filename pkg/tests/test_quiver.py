import random

import pytest

from quiverlocus.lr import lr_coefficient
from quiverlocus.partitions import EMPTY, Partition, Rectangle
from quiverlocus.quiver import (RankConditionError, RankConditions, coefficients,
                                coefficients_two_row, dual_polynomial, dual_tuple, is_two_row,
                                omission_expansion)
from quiverlocus.sampling import (DEFAULT_SEED, distinct_by_rectangles, enumerate_rank_conditions,
                                  random_instances)
from quiverlocus.symbols import QuiverPolynomial, format_terms, parse_terms

P = Partition
FOUR_ARROW_TRIANGLE = [[6, 8, 9, 6], [5, 6, 6], [4, 3], [2]]
COMPLEX = [[1, 2, 1], [1, 1], [0]]


def test_parse_and_format_round_trip():
    text = "6 8 9 6\n5 6 6\n4 3\n2\n\n"
    r = RankConditions.parse(text)
    assert r.rows() == FOUR_ARROW_TRIANGLE
    assert RankConditions.parse(r.format()) == r


@pytest.mark.parametrize("text", ["1 2\n\n3\n", "1 x\n1\n", "1 2\n3 4\n", ""])
def test_parse_is_strict(text):
    with pytest.raises(RankConditionError):
        RankConditions.parse(text)


def test_validate_four_arrow_triangle():
    assert RankConditions.from_rows(FOUR_ARROW_TRIANGLE).validate() == (True, None)


@pytest.mark.parametrize("rows, where, kind", [
    ([[1, 1], [2]], (0, 1), "row"),
    ([[2, 1], [2]], (0, 1), "column"),
    ([[1, 1, 1], [1, 1], [0]], (0, 2), "quadrilateral"),
    ([[1, 1], [-1]], (0, 1), "negative"),
])
def test_validate_reports_violation(rows, where, kind):
    ok, bad = RankConditions.from_rows(rows).validate()
    assert not ok
    assert (bad.i, bad.j) == where and bad.kind == kind


def test_quadrilateral_example_is_valid():
    assert RankConditions.from_rows([[1, 3, 1], [1, 1], [1]]).is_valid()


def test_four_arrow_rectangles_and_codim():
    r = RankConditions.from_rows(FOUR_ARROW_TRIANGLE)
    rects = r.rectangles()
    assert [str(rects[k]) for k in [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)]] == \
        ["1x3", "2x3", "3x0", "1x2", "3x3", "2x1"]
    assert r.codim() == 22


def test_codim_requires_admissible():
    with pytest.raises(RankConditionError):
        coefficients(RankConditions.from_rows([[2, 1], [2]]))


def test_porteous_base_case():
    for e in range(1, 5):
        for f in range(1, 5):
            for rank in range(0, min(e, f) + 1):
                r = RankConditions.from_rows([[e, f], [rank]])
                assert r.codim() == (e - rank) * (f - rank)
                want = QuiverPolynomial.symbol(Rectangle(e - rank, f - rank).partition)
                assert coefficients(r) == want


def test_single_bundle_is_unit():
    r = RankConditions.from_rows([[3]])
    assert coefficients(r) == QuiverPolynomial.symbol()


def test_complex_example():
    r = RankConditions.from_rows(COMPLEX)
    want = QuiverPolynomial.symbol((1,), ()) + QuiverPolynomial.symbol((), (1,))
    assert coefficients(r) == want
    assert coefficients_two_row(r) == want


def test_two_row_example_from_text():
    r = RankConditions.from_rows([[2, 2, 2], [1, 1], [0]])
    assert [str(R) for R in r.rectangles().values()] == ["1x1", "1x1", "1x1"]
    got = coefficients(r)
    assert got == coefficients_two_row(r)
    # sigma = (1): (attach(R1, (1), ()), attach(R2, (), ())) = ((2), (1))
    # tau = (1):   (attach(R1, (), ()), attach(R2, (), (1))) = ((1), (1,1))
    assert format_terms(got) == "1 (1) (1,1)\n1 (2) (1)"


def test_two_row_all_empty_middle():
    r = RankConditions.from_rows([[1, 2, 1], [0, 0], [0]])
    sym = coefficients_two_row(r)
    assert len(sym) == 1 and coefficients(r) == sym


def test_two_row_rejects_deep_rectangle():
    r = RankConditions.from_rows([[2, 2, 2, 2], [1, 1, 1], [1, 1], [0]])
    assert not is_two_row(r)
    with pytest.raises(ValueError):
        coefficients_two_row(r)


def test_golden_format_round_trip():
    r = RankConditions.from_rows(FOUR_ARROW_TRIANGLE)
    p = coefficients(r)
    assert parse_terms(format_terms(p)) == p


def _sample(count=120, max_n=4, max_entry=4):
    return random_instances(DEFAULT_SEED, count, max_n, max_entry)


def test_homogeneity_and_positivity():
    for r in _sample():
        d = r.codim()
        for lam, c in coefficients(r).items():
            assert sum(p.size for p in lam) == d
            assert c >= 1


def test_difference_dependence():
    for r in _sample(60, 3, 3):
        for c in (1, 3):
            assert coefficients(r.shifted(c)) == coefficients(r)


def test_two_row_corollary_exhaustive_small():
    for n in (2, 3):
        for r in distinct_by_rectangles(enumerate_rank_conditions(n, 3, min_rank=1)):
            if is_two_row(r):
                p = coefficients(r)
                assert p == coefficients_two_row(r)
                assert all(c == 1 for _, c in p.items())


def test_dual_examples():
    r = RankConditions.from_rows([[3, 2], [1]])
    assert r.rectangle(0, 1) == Rectangle(2, 1)
    assert r.dual().rectangle(0, 1) == Rectangle(1, 2)
    assert dual_tuple([P((2,))]) == (P((1, 1)),)
    assert coefficients(r.dual()) == dual_polynomial(coefficients(r))


def test_dual_reflects_rectangles():
    r = RankConditions.from_rows(FOUR_ARROW_TRIANGLE)
    d = r.dual()
    assert d.dual() == r
    n = r.n
    for (i, j), R in r.rectangles().items():
        assert d.rectangle(n - j, n - i) == R.transpose()


def test_duality_identity_exhaustive_small():
    for n in (1, 2, 3):
        for r in distinct_by_rectangles(enumerate_rank_conditions(n, 3, min_rank=1)):
            assert coefficients(r.dual()) == dual_polynomial(coefficients(r))


def test_empty_rectangle_height_independence():
    # group instances by rectangle data, forgetting the sides of empty rectangles
    groups = {}
    for n in (2, 3):
        for r in enumerate_rank_conditions(n, 3, min_rank=1):
            key = (n, tuple((k, R) if not R.is_empty else (k, None)
                            for k, R in sorted(r.rectangles().items())))
            groups.setdefault(key, set()).add(coefficients(r))
    assert all(len(v) == 1 for v in groups.values())


def test_inessential_detection():
    assert RankConditions.from_rows([[2, 3], [1]]).inessential_indices() == []
    r = RankConditions.from_rows([[1, 2, 1], [1, 1], [1]])
    assert 1 in r.inessential_indices()
    assert omission_expansion(r, 1) == coefficients(r)


def test_rank_one_middle_bundle_is_not_inessential():
    # both lines below E_1 are empty, but E_1 bounds the composite E_0 -> E_2
    r = RankConditions.from_rows([[4, 1, 4], [1, 1], [1]])
    assert all(R.is_empty for R in r.rectangles().values())
    assert 1 not in r.inessential_indices()
    with pytest.raises(RankConditionError):
        r.omit(1)


def test_omission_identity_exhaustive_small():
    checked = 0
    for n in (2, 3):
        for r in enumerate_rank_conditions(n, 3, min_rank=1):
            for k in r.inessential_indices():
                short = r.omit(k)
                assert short.is_valid() and short.codim() == r.codim()
                assert omission_expansion(r, k) == coefficients(r)
                checked += 1
    assert checked > 100


def test_lr_embedding_small():
    # rectangle R = w x h; three maps; coefficient of (alpha, beta, tau) is c^gamma_{alpha,beta}
    w, h = 2, 2
    N = w + h
    r = RankConditions.from_rows([[w, N, N, h], [w, N, h], [w, h], [0]])
    p = coefficients(r)
    box = Rectangle(w, h).partition
    for (alpha, beta, tau), c in p.items():
        gamma = Partition(sorted((w - t for t in tuple(tau) + (0,) * (h - len(tau))), reverse=True))
        assert box.contains(gamma)
        assert c == lr_coefficient(gamma, alpha, beta)
