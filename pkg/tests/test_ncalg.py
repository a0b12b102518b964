from __future__ import annotations

import json
import random

import pytest

from qiso.hopf import su2_presentation
from qiso.ncalg import (CONFLUENT, GenSet, NCPoly, Presentation, UniverseError, hom_check,
                        random_ncpoly)
from qiso.qgroups import make_algebra, somu3_images
from qiso.repnum import su2_oracle_rep
from qiso.scalar import mu


@pytest.fixture(scope="module")
def P():
    return su2_presentation(8)


def test_mul_by_one(P):
    a = P["alpha"]
    assert a * 1 == a
    assert P.mul(a, P.one()) == a


def test_star_anti_automorphism(P):
    a, g = P["alpha"], P["gamma"]
    assert (a * g).star() == P["gamma*"] * P["alpha*"]
    assert P.normal_form(P.mul(a, g).star()) == P.mul(g.star(), a.star())


def test_su2_confluent_with_expected_rules(P):
    assert P.status == CONFLUENT
    a, a_, g_, g = P["alpha"], P["alpha*"], P["gamma*"], P["gamma"]
    assert P.normal_form(g * a) == mu ** -1 * a * g
    assert P.normal_form(a_ * a) == P.normal_form(1 - g_ * g)
    assert P.normal_form(a * a_) == P.normal_form(1 - mu ** 2 * g_ * g)


def test_rules_confirmed_by_oracle(P):
    R = su2_oracle_rep(0.5, 12, 6)
    mask = R.interior_mask(3)
    for lhs, rhs in P.rule_list():
        d = NCPoly.word(P.gens, lhs) - NCPoly(P.gens, rhs)
        assert R.evaluate(d).interior_residual(mask) < 1e-12


def test_defining_relations_vanish(P):
    assert all(P.reduces_to_zero(r) for _, r in P.relations)
    assert P.reduces_to_zero(P["alpha*"] * P["alpha"] + P["gamma*"] * P["gamma"] - 1)


def test_normal_form_of_one(P):
    assert P.normal_form(P.one()) == P.one()


def test_reduces_to_zero(P):
    assert P.reduces_to_zero(P["gamma"] * P["gamma*"] - P["gamma*"] * P["gamma"])
    assert not P.reduces_to_zero(P["alpha"] * P["gamma"] - P["gamma"] * P["alpha"])
    assert P.reduces_to_zero(P.zero())


def test_trivial_presentation():
    G = GenSet(["x", "y"])
    Q = Presentation("free", G, [], degree_bound=4)
    assert Q.status == CONFLUENT and not Q.rules
    w = Q.word(["y", "x"])
    assert Q.normal_form(w) == w


def test_umu2_completion_status():
    U = make_algebra("Umu2").pres
    assert U.status == CONFLUENT or U.status == "proved-up-to-6"
    u11, u12, u21, u22 = (U[n] for n in ("u11", "u12", "u21", "u22"))
    assert U.normal_form(U["D"]) == U.normal_form(u11 * u22 - mu * u12 * u21)


def test_universe_mismatch(P):
    G = GenSet(["x"])
    with pytest.raises(UniverseError):
        P.normal_form(NCPoly.gen(G, "x"))


def test_hom_check_somu3(P):
    S = make_algebra("SOmu3").pres
    res = hom_check(S, P, somu3_images(P))
    assert res and all(ok for _, ok, _ in res)


def test_hom_check_identity(P):
    imgs = {n: P[n] for n in ("alpha", "gamma")}
    assert all(ok for _, ok, _ in hom_check(P, P, imgs))


def test_hom_check_detects_wrong_image(P):
    S = make_algebra("SOmu3").pres
    imgs = dict(somu3_images(P))
    imgs["G"] = P["gamma"]
    res = {lab: ok for lab, ok, _ in hom_check(S, P, imgs)}
    assert not all(res.values())
    bad = [lab for lab, ok in res.items() if not ok]
    assert any("G" in lab for lab in bad)


def test_random_associativity(P):
    rng = random.Random(7)
    for _ in range(40):
        x, y, z = (P.normal_form(random_ncpoly(P.gens, rng, 4, 3)) for _ in range(3))
        assert P.mul(P.mul(x, y), z) == P.mul(x, P.mul(y, z))


def test_json_roundtrip(P):
    text = P.to_json()
    data = json.loads(text)
    assert data["format"] == "qiso-presentation/1"
    Q = Presentation.from_json(text)
    assert Q.to_json() == text
    assert Q.status == P.status
