from collections import defaultdict

import pytest
from hypothesis import given, settings, strategies as st

from krcrystal.crystal import Crystal
from krcrystal.graph import generate_graph
from krcrystal.tableau import (EMPTY, LOWER, RAISE, Tableau, antinormal_tableau, barred, column_insert,
                               count_ssyt, enumerate_ssyt, evacuation, hook_content, knuth_equivalent,
                               normal_tableau, p_tableau, promotion, promotion_inverse, rectify, rotated,
                               tableau_op, unbarred, word_op)
from krcrystal.verify import lusztig_involution
from krcrystal.weights import CartanType

from oracles import all_words, knuth_class

words = st.lists(st.integers(1, 4), max_size=8)


def test_insertion_classes_are_knuth_classes():
    classes = defaultdict(set)
    for w in all_words((1, 2, 3), 5):
        classes[p_tableau(w)].add(tuple(w))
    for P, members in classes.items():
        assert knuth_class(next(iter(members))) == members
        assert P.is_normal() and P.is_semistandard()


@given(words)
def test_p_tableau_reading_word_round_trip(w):
    P = p_tableau(w)
    assert P.is_normal() and P.is_semistandard()
    assert sorted(P.entries()) == sorted(w)
    assert p_tableau(P.reading_word()) == P
    assert knuth_equivalent(P.reading_word(), w)


@given(words)
def test_rectifications_stay_in_the_class(w):
    P = p_tableau(w)
    A = rectify(P, "se")
    assert A.is_antinormal() and A.is_semistandard()
    assert sorted(A.shape) == sorted(P.shape)
    assert rectify(A, "normal") == P
    assert knuth_equivalent(A.reading_word(), w)


def test_column_insert_single_steps():
    T = normal_tableau([[1, 2], [3]])
    assert column_insert(T, 2) == p_tableau(T.reading_word() + (2,))
    assert column_insert(EMPTY, 5) == normal_tableau([[5]])


@pytest.mark.parametrize("shape,n", [((2, 1), 3), ((2, 2), 4), ((3, 1), 3), ((2, 2, 1), 4), ((3,), 2)])
def test_hook_content_matches_enumeration(shape, n):
    listed = list(enumerate_ssyt(list(shape), range(1, n + 1)))
    assert all(T.is_semistandard() for T in listed)
    assert len(set(listed)) == len(listed) == hook_content(shape, n) == count_ssyt(shape, n)


def test_skew_count():
    # (2,2)/(1) over [3]: list fillings directly
    listed = list(enumerate_ssyt([1, 2], range(1, 4), [1, 0]))
    assert count_ssyt((2, 2), 3, inner=(1,)) == len(listed)


class TableauCrystal(Crystal):
    def __init__(self, n):
        self.n = n
        self.cartan = CartanType("A", n)
        self.index_set = tuple(range(1, n))
        self.alphabet = unbarred(n)

    def e(self, T, i):
        return tableau_op(T, i, RAISE, self.alphabet)

    def f(self, T, i):
        return tableau_op(T, i, LOWER, self.alphabet)

    def weight(self, T):
        c = [0] * self.n
        for x in T.entries():
            c[x - 1] += 2
        return self.cartan.weight(c)

    def key(self, T):
        return T.key()


@pytest.mark.parametrize("shape,n", [((2, 1), 3), ((2, 2), 4), ((3, 1, 1), 4)])
def test_tableau_crystal_is_closed_and_evacuation_is_lusztig(shape, n):
    model = TableauCrystal(n)
    top = Tableau(tuple((k + 1,) * m for k, m in enumerate(shape)))
    g = generate_graph(model, [top])
    assert len(g) == len(list(enumerate_ssyt(list(shape), range(1, n + 1))))
    eta = lusztig_involution(g, model.index_set, lambda i: n - i)
    for v, T in enumerate(g.elements):
        assert g.elements[eta[v]] == evacuation(T, n)


@given(st.data())
@settings(max_examples=40)
def test_promotion_inverse_and_rectangle_order(data):
    r = data.draw(st.integers(1, 3))
    s = data.draw(st.integers(1, 3))
    n = data.draw(st.integers(r + 1, 5))
    listed = list(enumerate_ssyt([s] * r, range(1, n + 1)))
    T = listed[data.draw(st.integers(0, len(listed) - 1))]
    U = promotion(T, n)
    assert U.is_semistandard() and U.shape == T.shape
    assert promotion_inverse(U, n) == T
    for _ in range(n - 1):
        U = promotion(U, n)
    assert U == T


def test_promotion_shifts_content():
    T = normal_tableau([[1, 2, 3], [3]])
    U = promotion(T, 3)
    assert sorted(U.entries()) == sorted(x % 3 + 1 for x in T.entries())


def test_rotated_alphabet_round_trip():
    A = rotated(6, 3)
    assert [A.decode(A.encode(x)) for x in range(1, 7)] == list(range(1, 7))
    assert A.encode(4) == 1 and A.encode(3) == 6
    assert A.index_set == (0, 1, 2, 4, 5)
    assert A.pair(0) == (3, 4)


def test_barred_operators():
    A = barred(3)
    assert word_op((-3,), 2, LOWER, A) == (-2,)
    assert word_op((-2,), 1, LOWER, A) == (-1,)
    assert word_op((-1,), 1, LOWER, A) is None


def test_antinormal_constructor_and_rotation():
    A = antinormal_tableau([[-3, -2, -2], [-3, -2, -1, -1]])
    assert A.is_antinormal() and A.offsets == (1, 0)
    assert A.rotate180().rotate180() == A
    assert Tableau.from_columns(A.corner_columns("se"), "se") == A


def test_from_columns_rejects_non_shapes():
    with pytest.raises(ValueError):
        Tableau.from_columns([[1], [1, 2]], "nw")
