import pytest

from conftest import CSASZAR_TORUS
from nvcat.cochains import CohomologyRing, cup, integral_cocycle_cochain
from nvcat.complexes import divisibility, load_document, make_complex
from nvcat.corpus import document
from nvcat.fields import Field
from nvcat.massey import (
    NONZERO,
    VANISHES,
    MasseyOrderError,
    massey_power,
    survivor_check,
)

Q = Field.rationals()


def untwisted_ring(X):
    return CohomologyRing(X, None, Q.one(), Q)


def test_order_one_self_product_vanishes():
    X, xi = load_document(document("c3"))
    ring = untwisted_ring(X)
    xi_hat = integral_cocycle_cochain(X, xi, Q)
    res = massey_power(ring, xi_hat, xi_hat, 1)
    assert res.status == VANISHES  # odd-degree square over Q


def test_order_one_matches_cup_class():
    T = make_complex(7, CSASZAR_TORUS)
    ring = untwisted_ring(T)
    u, v = ring.basis(1)
    res = massey_power(ring, u, v, 1)
    assert res.status == NONZERO
    assert ring.coords(res.representative) == ring.coords(cup(u, v, None))


def test_nonzero_order_one_blocks_higher():
    T = make_complex(7, CSASZAR_TORUS)
    ring = untwisted_ring(T)
    u, v = ring.basis(1)
    ok, transcript = survivor_check(ring, u, v, 4)
    assert not ok
    assert transcript[0] == {"order": 1, "status": NONZERO}
    with pytest.raises(MasseyOrderError):
        massey_power(ring, u, v, 2)


def test_genus2_survivors():
    X, xi = load_document(document("genus2"))
    lam, eta = divisibility(X, xi)
    ring = untwisted_ring(X)
    xi_hat = integral_cocycle_cochain(X, eta, Q)
    survivors = 0
    for v in ring.basis(1):
        ok, transcript = survivor_check(ring, v, xi_hat, 4)
        if ok:
            assert [t["status"] for t in transcript] == [VANISHES] * 4
            survivors += 1
    # the two classes of the handle disjoint from the cocycle survive
    assert survivors >= 2


def test_bouquet_torus_classes_survive():
    X, xi = load_document(document("bouquet"))
    ring = untwisted_ring(X)
    xi_hat = integral_cocycle_cochain(X, xi, Q)
    results = [survivor_check(ring, v, xi_hat, 4)[0] for v in ring.basis(1)]
    assert sum(results) >= 2


def test_invalid_order():
    X, xi = load_document(document("c3"))
    ring = untwisted_ring(X)
    xi_hat = integral_cocycle_cochain(X, xi, Q)
    with pytest.raises(ValueError):
        massey_power(ring, xi_hat, xi_hat, 0)


def test_twisted_ring_rejected():
    from nvcat.massey import MasseyTower

    X, xi = load_document(document("c3"))
    ring = CohomologyRing(X, xi, Q.of(2), Q)
    xi_hat = integral_cocycle_cochain(X, xi, Q)
    with pytest.raises(ValueError):
        MasseyTower(ring, xi_hat, xi_hat)
