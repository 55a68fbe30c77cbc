import pytest

from krcrystal.graph import generate_graph
from krcrystal.involutions import (IDENTITIES, TYPE_A_IDENTITIES, applicable_identities, check_identity,
                                   eta_k, involution_data, promotion_order_witnesses, run_identities)
from krcrystal.kr_a import KRTypeA
from krcrystal.kr_d import EVEN, ODD, KRTypeD
from krcrystal.kr_folded import KRFolded
from krcrystal.tableau import enumerate_ssyt, promotion
from krcrystal.weights import CartanType

TYPE_A = [(n, r, s) for n in range(2, 6) for r in range(1, n) for s in (1, 2, 3)]
FOLDED = [(n, s, fold) for n in (2, 3) for s in (1, 2) for fold in (1, 2)]
TYPE_D = [(4, s, parity) for s in (1, 2) for parity in (EVEN, ODD)]


def _graph(model):
    return generate_graph(model, model.seeds())


def _assert_all(reports):
    for rep in reports:
        assert rep.ok, (rep.name, rep.violations[:3])
        assert rep.checked > 0


@pytest.mark.parametrize("n,r,s", TYPE_A)
def test_type_a_identities(n, r, s):
    K = KRTypeA(n, r, s)
    _assert_all(run_identities(_graph(K), K))


@pytest.mark.parametrize("n,s,fold", FOLDED)
def test_folded_zero_operator_from_involution(n, s, fold):
    K = KRFolded(n, s, fold)
    _assert_all(run_identities(_graph(K), K))


@pytest.mark.parametrize("n,s,parity", TYPE_D)
def test_type_d_zero_operator_from_involution(n, s, parity):
    K = KRTypeD(n, s, parity)
    _assert_all(run_identities(_graph(K), K))


def test_promotion_is_not_periodic_off_rectangles():
    witnesses = promotion_order_witnesses((2, 1), 3)
    assert witnesses
    T = witnesses[0]
    U = T
    for _ in range(3):
        U = promotion(U, 3)
    assert U != T
    assert not promotion_order_witnesses((2, 2), 3)


def test_witness_search_is_exhaustive():
    listed = list(enumerate_ssyt([2, 1], range(1, 4)))
    assert set(promotion_order_witnesses((2, 1), 3)) <= set(listed)


@pytest.mark.parametrize("n,r,s", [(3, 1, 2), (4, 2, 2)])
def test_every_eta_is_an_involution(n, r, s):
    g = _graph(KRTypeA(n, r, s))
    for k in range(n):
        eta = eta_k(g, k)
        assert all(eta[eta[v]] == v for v in eta)


def test_involution_index_data():
    assert involution_data(CartanType("A", 5), 2) == ((1, 3, 4), {1: 1, 3: 4, 4: 3})
    assert involution_data(CartanType("A", 4), 0) == ((1, 2, 3), {1: 3, 2: 2, 3: 1})
    assert involution_data(CartanType("D", 5), 4) == ((1, 2, 3, 5), {1: 5, 2: 3, 3: 2, 5: 1})
    with pytest.raises(ValueError):
        involution_data(CartanType("C", 3), 1)


def test_type_a_only_identities_are_rejected_elsewhere():
    K = KRFolded(2, 1, 2)
    g = _graph(K)
    assert applicable_identities(K) == ("e0-via-etar",)
    assert applicable_identities(KRTypeA(3, 1, 1)) == IDENTITIES
    for name in TYPE_A_IDENTITIES:
        with pytest.raises(ValueError):
            check_identity(name, g, K)
    with pytest.raises(ValueError):
        check_identity("nonsense", g, K)
