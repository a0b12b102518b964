from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from qiso.freewords import (EPS, GAMatrix, GroupAlgElem, GroupWord, VRep, Y, ad_V, algebra_relations,
                            character_eval, character_value, closed_form_suite, closed_forms,
                            no_action_witness, q_minus, q_plus, word_ops)
from qiso.repnum import SparseOp, build_cp


@pytest.fixture(scope="module")
def T():
    return build_cp(0.5, 0.3, 12)


@pytest.fixture(scope="module")
def rep():
    return VRep(12)


def test_y_squared():
    y = GroupWord.y()
    assert y * y == EPS
    assert word_ops(y, y, "mul") == EPS


def test_g_inverse():
    assert GroupWord.g(1) * GroupWord.g(1, -1) == EPS


def test_star_reverses():
    w = GroupWord.parse("g0.y.g1^-1")
    assert w.star() == GroupWord.parse("g1.y.g0^-1")
    assert word_ops(w, op="star") == w.star()
    for th in (0.1, 0.37):
        assert abs(character_value(w.star(), th) - character_value(w, th).conjugate()) < 1e-14


def test_parse_render_roundtrip():
    for text in ("e", "y", "g0.y.g1^-1", "g3.g3.y"):
        assert GroupWord.parse(text).render() == text


def test_group_algebra_star_antimultiplicative():
    a = q_plus(2) + Y() * 0.5
    b = q_minus(1) * 2 - 1
    assert (a * b).star() == b.star() * a.star()


def test_alg1_identity():
    for n in range(5):
        assert q_plus(n) * q_minus(n).star() == q_minus(n) * q_plus(n).star()


def test_q_minus_is_q_plus_y():
    for n in range(5):
        assert q_minus(n) == q_plus(n) * Y()


def test_algebra_relations(T):
    for n in range(1, 6):
        for k, v in algebra_relations(T, n).items():
            assert v.norm1() < 1e-12, (n, k)


def test_ad_v_identity(T, rep):
    X = ad_V(T["1"], rep)
    assert X.is_identity()


def test_ad_v_ptilde(T, rep):
    for n in (0, 3, 7):
        X = ad_V(T.Ptilde(n), rep)
        ok, worst, bad = X.compare(GAMatrix.from_op(T.Ptilde(n)), T.labels)
        assert ok, (n, worst, bad[:3])


def test_ad_v_closed_forms(T, rep):
    cf = closed_forms(T)
    cols = [lab for lab, ok in zip(T.labels, T.interior) if ok]
    for name in ("A", "B", "tau"):
        ok, worst, bad = ad_V(T[name], rep).compare(cf[name], cols)
        assert ok, (name, worst, bad[:3])


def test_printed_b_prefactor_disagrees(T, rep):
    cf = closed_forms(T, printed_b=True)
    cols = [lab for lab, ok in zip(T.labels, T.interior) if ok]
    ok, worst, _ = ad_V(T["B"], rep).compare(cf["B"], cols)
    assert not ok and worst > 1e-3


def test_tau_entry(T, rep):
    X = ad_V(T["tau"], rep)
    n = 4
    want = GroupAlgElem.word(GroupWord.g(n - 1) * GroupWord.g(n, -1))
    assert X[(n - 1, 1), (n, 1)].close_to(want)


def test_b_kills_ground_column(T, rep):
    X = ad_V(T["B"], rep)
    assert all(v.norm1() < 1e-15 for v in X.column((0, 1)).values())


def test_v_unitary(rep):
    assert rep.unitarity() == (True, True)


def test_character_values():
    assert character_eval(EPS, 0.3) == 1
    w = GroupWord.g(0) * GroupWord.g(1, -1)
    assert abs(character_eval(w, 0.2) - cmath.exp(2j * math.pi * 0.2)) < 1e-14
    assert character_eval(GroupWord.y(), 0.2) == 1


def test_closed_form_suite():
    rep = closed_form_suite(N_max=16)
    assert rep.passed, [c.id for c in rep.failures()]


@pytest.mark.parametrize("theta", [1 / 3, 0.0, 0.1234])
def test_no_action_witness(theta):
    rep = no_action_witness(theta, N_max=24)
    assert rep.passed, [c.id for c in rep.failures()]


def test_witness_norm_value():
    rep = no_action_witness(1 / 3, N_max=24)
    ch = rep["column norms = |1 - e(theta)| for interior n >= 2"]
    assert "1.7320508" in ch.detail
