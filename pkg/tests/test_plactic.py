from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from quiverlocus.lr import lr_coefficient, split_expansion
from quiverlocus.partitions import Partition, Rectangle, partitions_of
from quiverlocus.plactic import (EMPTY_TABLEAU, Tableau, TableauError, all_tableaux,
                                 factorization_count, factorizations, factorizations_brute_force,
                                 format_tableau, insertion_product, jdt_product, parse_tableau,
                                 superstandard, tableaux_with_content)
from quiverlocus.quiver import fits_together

T = Tableau.from_rows
P = Partition


def test_semistandard_invariants():
    with pytest.raises(TableauError):
        T([[2, 1]])
    with pytest.raises(TableauError):
        T([[1, 2], [1, 3]])
    with pytest.raises(TableauError):
        T([[1], [2, 3]])
    assert T([[1, 1, 2], [2, 3]]).shape == (3, 2)


def test_text_format_round_trip():
    t = T([[1, 1, 2], [2, 3]])
    assert format_tableau(t) == "1 1 2\n2 3"
    assert parse_tableau("1 1 2\n2 3\n") == t
    assert format_tableau(EMPTY_TABLEAU) == "-"
    assert parse_tableau("-") == EMPTY_TABLEAU


@pytest.mark.parametrize("p, q, expected", [
    ([[1]], [[1]], [[1, 1]]),
    ([[2]], [[1]], [[1], [2]]),
    ([[1, 2]], [[1]], [[1, 1], [2]]),
])
def test_product_examples(p, q, expected):
    assert jdt_product(T(p), T(q)) == T(expected)
    assert insertion_product(T(p), T(q)) == T(expected)


def test_empty_is_unit():
    t = T([[1, 2], [3]])
    assert jdt_product(t, EMPTY_TABLEAU) == t == jdt_product(EMPTY_TABLEAU, t)


SMALL = all_tableaux(4, 3)


def test_tableau_count():
    # Kostka sums over shapes with at most 4 boxes and 3 letters
    assert len(SMALL) == 71


def test_jdt_matches_row_insertion_exhaustively():
    for a in SMALL:
        for b in SMALL:
            if a.size + b.size <= 4:
                assert jdt_product(a, b) == insertion_product(a, b)


def test_associativity_exhaustively():
    for a in SMALL:
        for b in SMALL:
            if a.size + b.size > 4:
                continue
            ab = jdt_product(a, b)
            for c in SMALL:
                if a.size + b.size + c.size <= 4:
                    assert jdt_product(ab, c) == jdt_product(a, jdt_product(b, c))


tableaux = st.lists(st.integers(1, 5), max_size=7).map(Tableau.from_word)


@settings(max_examples=200, deadline=None)
@given(tableaux, tableaux, tableaux)
def test_associativity_random(a, b, c):
    assert jdt_product(jdt_product(a, b), c) == jdt_product(a, jdt_product(b, c))
    assert jdt_product(a, b) == insertion_product(a, b)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 6), max_size=8))
def test_product_preserves_content_and_reading_word_class(word):
    t = Tableau.from_word(word)
    assert Counter(t.entries()) == Counter(word)
    assert Tableau.from_word(t.reading_word()) == t


def test_factorization_examples():
    one = T([[1]])
    f = factorizations(one)
    assert f == {(P((1,)), P(())): [(one, EMPTY_TABLEAU)], (P(()), P((1,))): [(EMPTY_TABLEAU, one)]}
    assert factorization_count(T([[1, 1], [2]]), (1,), (1, 1)) == 1


def test_factorizations_match_brute_force():
    for t in all_tableaux(5, 3):
        fast = {k: sorted(v, key=lambda pq: (pq[0].rows, pq[1].rows)) for k, v in factorizations(t).items()}
        slow = {k: sorted(v, key=lambda pq: (pq[0].rows, pq[1].rows))
                for k, v in factorizations_brute_force(t).items()}
        assert fast == slow


def test_factorizations_are_products():
    for t in all_tableaux(5, 3):
        for (s, u), pairs in factorizations(t).items():
            for p, q in pairs:
                assert p.shape == s and q.shape == u
                assert jdt_product(p, q) == t


def test_factorization_counts_are_lr_coefficients():
    for t in all_tableaux(6, 3):
        lam = t.shape
        counts = {k: len(v) for k, v in factorizations(t).items()}
        assert counts == {k: c for k, c in split_expansion(lam).items()}


def test_one_tableau_per_shape_up_to_six():
    for n in range(7):
        for lam in partitions_of(n):
            t = superstandard(lam)
            counts = {k: len(v) for k, v in factorizations(t).items()}
            for (s, u), c in counts.items():
                assert c == lr_coefficient(lam, s, u)
            assert sum(counts.values()) == sum(split_expansion(lam).values())


def test_rectangular_tableaux_factor_uniquely():
    for w, h in product(range(1, 4), range(1, 4)):
        R = Rectangle(w, h)
        t = superstandard(R.partition)
        for (s, u), pairs in factorizations(t).items():
            assert len(pairs) == 1
            assert fits_together(s, u, R)


def test_tableaux_with_content_counts():
    # Kostka numbers: K_{(2,1),(1,1,1)} = 2 and the total number for content 1,2,3 is 4
    tabs = tableaux_with_content(Counter({1: 1, 2: 1, 3: 1}))
    assert len(tabs) == 4
    assert sum(1 for t in tabs if t.shape == (2, 1)) == 2
