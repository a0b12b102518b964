from __future__ import annotations

import pytest

from qiso.hopf import (TensorPoly, basis_by_length, haar_invariance_check, haar_su2, hopf_axiom_suite,
                       star_delta_check, su2_hopf, uq_act, uq_hopf, uq_pair, uq_presentation)
from qiso.ncalg import NCPoly
from qiso.qgroups import make_algebra
from qiso.scalar import mu, s


@pytest.fixture(scope="module")
def H():
    return su2_hopf()


def T(H, a, b):
    return TensorPoly.pure(H.pres, H.pres, a, b)


def test_delta_alpha(H):
    P = H.pres
    a, g, g_ = P["alpha"], P["gamma"], P["gamma*"]
    assert H.delta(a) == T(H, a, a) + T(H, g_, g).scale(-mu)


def test_delta_one(H):
    assert H.delta(H.pres.one()) == TensorPoly.one(H.pres, H.pres)


def test_delta_multiplicative(H):
    P = H.pres
    g, g_ = P["gamma"], P["gamma*"]
    assert H.delta(P.mul(g_, g)) == H.delta(g_) * H.delta(g)
    # (eps (x) id) recovers the element
    assert H.delta(P.mul(g_, g)).apply_left(H.counit_word) == P.normal_form(g_ * g)


def test_counit(H):
    P = H.pres
    assert H.counit(P["alpha"]) == 1
    assert H.counit(P["gamma"]) == 0
    assert H.counit(P.one()) == 1


def test_antipode_of_one(H):
    assert H.antipode(H.pres.one()) == H.pres.one()


def test_umu2_antipode_table():
    U = make_algebra("Umu2")
    Q, HU = U.pres, U.hopf
    assert HU.antipode(Q["u11"]) == Q.normal_form(Q["u22"] * Q["Dinv"])
    for p in (1, 2):
        for q in (1, 2):
            assert HU.antipode(Q[f"u{p}{q}"]) == Q.normal_form(Q[f"u{q}{p}"].star())


def test_axioms_on_basis(H):
    P = H.pres
    words = basis_by_length(P, 3)
    recs = hopf_axiom_suite(H, [NCPoly.word(P.gens, w) for w in words])
    assert len(recs) == len(words)
    assert all(r["coassociativity"] and r["counit"] and r["antipode"] for r in recs)


def test_axioms_on_one(H):
    (r,) = hopf_axiom_suite(H, [H.pres.one()])
    assert r["coassociativity"] and r["counit"] and r["antipode"]


def test_star_delta(H):
    P = H.pres
    for x in (P["alpha"], P["gamma"], P.mul(P["alpha"], P["gamma*"])):
        assert star_delta_check(H, x)


def test_haar_values(H):
    P = H.pres
    assert haar_su2(P.mul(P["gamma*"], P["gamma"])) == 1 / (1 + mu ** 2)
    assert haar_su2(P.mul(P["alpha"], P["gamma*"])) == 0
    assert haar_su2(P.one()) == 1
    assert haar_su2(P.mul(P["alpha*"], P["alpha"])) == mu ** 2 / (1 + mu ** 2)


def test_haar_power_table(H):
    P = H.pres
    x = P.one()
    gg = P.mul(P["gamma*"], P["gamma"])
    for k in range(7):
        assert haar_su2(x) == (1 - mu ** 2) / (1 - mu ** (2 * k + 2))
        x = P.mul(x, gg)


def test_haar_invariance():
    res = haar_invariance_check(3)
    assert res and all(ok for _, ok in res)


def test_haar_invariance_gamma_gamma(H):
    P = H.pres
    d = H.delta(P.mul(P["gamma*"], P["gamma"]))
    h = lambda w: haar_su2(NCPoly.word(P.gens, w))
    target = P.one() * (1 / (1 + mu ** 2))
    assert d.apply_left(h) == target
    assert d.apply_right(h) == target


def test_uq_pairing():
    Q = uq_presentation()
    P = su2_hopf().pres
    assert uq_pair(Q["K"], P["alpha*"]) == s
    assert uq_pair(Q["Kinv"], P["alpha"]) == s
    assert uq_pair(Q["E"], P["alpha"]) == 0
    assert uq_pair(Q.one(), P.one()) == 1


def test_uq_pairing_routes_agree():
    Q = uq_presentation()
    P = su2_hopf().pres
    f = Q.mul(Q["E"], Q["F"])
    for x in (P.mul(P["gamma"], P["gamma*"]), P.mul(P["alpha"], P["alpha*"])):
        assert uq_pair(f, x, "A") == uq_pair(f, x, "B")


def test_uq_actions():
    Q = uq_presentation()
    P = su2_hopf().pres
    assert uq_act("left", Q["E"], P["alpha"]) == P["gamma*"] * (-mu)
    assert uq_act("right", Q["F"], P["alpha"]) == P["gamma"]
    assert uq_act("left", Q["K"], P.one()) == P.one()


def test_uq_hopf_axioms():
    U = uq_hopf()
    Q = U.pres
    recs = hopf_axiom_suite(U, [Q[g] for g in Q.gens.names])
    assert all(r["coassociativity"] and r["counit"] and r["antipode"] for r in recs)
