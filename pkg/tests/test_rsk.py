from hypothesis import given, strategies as st

from krcrystal.kr_a import col_letters, make_matrix, row_letters
from krcrystal.rsk import (BiMatrix, column_word, ell, ell_by_insertion, from_biword, inverse_rsk,
                           is_sorted_biword, kappa_nw, kappa_se, matrices, parse_matrix, rsk, to_biword)
from krcrystal.tableau import antinormal_tableau, normal_tableau

from oracles import longest_weakly_decreasing_brute

WORKED = [[1, 0, 1], [2, 1, 0], [0, 2, 0]]


def worked_matrix():
    return make_matrix(WORKED, 6, 3)


def test_worked_matrix_se_pair():
    S, T = kappa_se(worked_matrix())
    assert S == antinormal_tableau([[-3, -2, -2], [-3, -2, -1, -1]])
    assert T == antinormal_tableau([[4, 4, 4], [5, 5, 5, 6]])


def test_worked_matrix_nw_pair():
    P, Q = kappa_nw(worked_matrix())
    assert P == normal_tableau([[-3, -3, -2, -2], [-2, -1, -1]])
    assert Q == normal_tableau([[4, 4, 4, 6], [5, 5, 5]])


def test_worked_matrix_level():
    assert ell(worked_matrix()) == 4 == ell_by_insertion(worked_matrix())


def test_zero_matrix():
    Z = BiMatrix.zero(row_letters(2), col_letters(4, 2))
    P, Q = rsk(Z)
    assert not P.rows and not Q.rows and ell(Z) == 0


def _matrix(draw_rows, r, m):
    return BiMatrix(row_letters(r), tuple(range(r + 1, r + m + 1)), tuple(tuple(x) for x in draw_rows))


small = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda m: st.lists(st.lists(st.integers(0, 2), min_size=m, max_size=m), min_size=r, max_size=r)
        .map(lambda rows: _matrix(rows, r, m))))


@given(small)
def test_biword_round_trip_and_order(M):
    a, b = to_biword(M)
    assert is_sorted_biword(a, b)
    assert from_biword(a, b, M.row_letters, M.col_letters) == M


@given(small)
def test_inverse_rsk(M):
    P, Q = rsk(M)
    assert P.shape == Q.shape and P.is_semistandard() and Q.is_semistandard()
    assert inverse_rsk(P, Q, M.row_letters, M.col_letters) == M


@given(small)
def test_recording_content_is_column_word(M):
    P, Q = rsk(M)
    assert sorted(Q.entries()) == sorted(column_word(M))


@given(small)
def test_level_statistic_three_ways(M):
    w = to_biword(M)[0]
    assert ell(M) == ell_by_insertion(M) == longest_weakly_decreasing_brute(w)


def test_matrix_listing_counts():
    # 2x2 matrices with entries summing to at most 2: C(2+4, 4)
    assert sum(1 for _ in matrices((-2, -1), (3, 4), 2)) == 15


def test_parse_matrix():
    assert parse_matrix("1 0 1\n2 1 0\n\n0 2 0\n") == WORKED
