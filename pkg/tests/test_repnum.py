from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qiso.hopf import su2_presentation
from qiso.ncalg import random_ncpoly
from qiso.repnum import (SparseOp, build_cp, build_dabrowski, c_from_t, cp_relation_residuals,
                         cp_structure_checks, haar_closed_form, haar_closed_form_suite, haar_spectral,
                         haar_tail_bound, oracle_coherence, oracle_relation_report, su2_oracle_rep,
                         t_from_c, trace_convergence, weighted_trace)

MU, C = 0.5, 0.3


@pytest.fixture(scope="module")
def T():
    return build_cp(MU, C, 64)


def test_sparse_basics():
    labels = ["a", "b"]
    X = SparseOp.from_entries(labels, {("a", "b"): 2.0})
    assert X.entry("a", "b") == 2.0
    assert X.H.entry("b", "a") == 2.0
    assert np.allclose((X @ X).dense(), 0)
    assert (X + X).entry("a", "b") == 4.0
    I = SparseOp.identity(labels)
    assert I.commutes_with(X)


def test_domain_errors():
    with pytest.raises(ValueError):
        build_cp(1.2, C, 10)
    with pytest.raises(ValueError):
        build_cp(MU, -1, 10)
    with pytest.raises(ValueError):
        build_cp(MU, C, 2)


def test_ground_vectors(T):
    lp, _ = T.lam
    assert abs(T["A"].entry((0, 1), (0, 1)) - lp) < 1e-15
    assert not T["B"].apply((0, 1))


def test_dirac_eigenvectors(T):
    D = T["D"].dense()
    for n in (1, 5, 20):
        v = np.zeros(len(T.labels))
        i, j = T.labels.index((n, 1)), T.labels.index((n, -1))
        v[i] = v[j] = 1 / math.sqrt(2)
        assert np.allclose(D @ v, n * v)
        v[j] = -v[j]
        assert np.allclose(D @ v, -n * v)


def test_cp_relations(T):
    rep = cp_relation_residuals(T)
    assert rep.passed, [c.id for c in rep.failures()]
    assert max(ch.residual or 0 for ch in rep if "excluded" not in ch.id) < 1e-12


def test_cp_structure(T):
    rep = cp_structure_checks(T)
    assert rep.passed, [c.id for c in rep.failures()]


def test_ab_commutation_direct(T):
    A, B = T["A"], T["B"]
    X = A @ B - (B @ A) * MU ** -2
    assert X.interior_residual() < 1e-12


def test_c_pm_vanish_only_at_zero(T):
    assert T.c_pm(0) == (0.0, 0.0)
    for n in range(1, 20):
        cp, cm = T.c_pm(n)
        assert cp != cm


def test_abs_b_diagonal(T):
    for n in (1, 2, 10):
        cp, cm = T.c_pm(n)
        assert abs(T["absB"].entry((n, 1), (n, 1)) - math.sqrt(cp)) < 1e-15
        assert abs(T["absB"].entry((n, -1), (n, -1)) - math.sqrt(cm)) < 1e-15


def test_haar_of_A():
    assert abs(haar_spectral([0, 1], MU, C) - 1 / (1 + MU ** 2)) < 1e-10
    assert abs(haar_spectral([1], MU, C) - 1) < 1e-12


def test_haar_of_A_squared():
    r = math.sqrt(C + 0.25)
    lp, lm = 0.5 + r, 0.5 - r
    want = (1 - MU ** 2) * (lp ** 3 - lm ** 3) / ((lp - lm) * (1 - MU ** 6))
    assert abs(haar_spectral([0, 0, 1], MU, C) - want) < 1e-10
    assert abs(haar_spectral(lambda x: x * x, MU, C) - want) < 1e-10


def test_tail_bound_decreases():
    b1 = haar_tail_bound([0, 1], MU, C, 10)
    b2 = haar_tail_bound([0, 1], MU, C, 20)
    assert 0 <= b2 < b1


def test_t_c_conversion():
    for t in (0.3, 0.8, 1.0):
        assert abs(t_from_c(c_from_t(t)) - t) < 1e-12
    assert c_from_t(1.0) == 0


def test_closed_form_boundary():
    want = (1 - MU ** 2) / (1 - MU ** 6) * MU ** 2
    assert abs(haar_closed_form(MU, 0.0) - want) < 1e-15


@pytest.mark.parametrize("c", [0.3, c_from_t(0.8), 0.0])
def test_three_route_suite(c):
    rep = haar_closed_form_suite(MU, c)
    assert rep.passed, [ch.id for ch in rep.failures()]


def test_dabrowski_block():
    spec = build_dabrowski(Fraction(3, 2), 1.0, 0.0, MU)
    D = spec.D.dense()
    l, m = Fraction(1, 2), Fraction(1, 2)
    i = spec.labels.index((l, m, Fraction(1, 2)))
    j = spec.labels.index((l, m, Fraction(-1, 2)))
    v = np.zeros(len(spec.labels))
    v[i] = v[j] = 1 / math.sqrt(2)
    assert np.allclose(D @ v, 0.5 * v)


def test_weighted_trace_decreasing():
    spec = build_dabrowski(6, 1.0, 0.0, MU)
    vals = [weighted_trace(spec, "1", t) for t in (0.1, 0.5, 1.0, 2.0)]
    assert all(a > b > 0 for a, b in zip(vals, vals[1:]))


def test_weighted_trace_R_block():
    spec = build_dabrowski(Fraction(1, 2), 1.0, 0.0, MU)
    t = 0.7
    l = 0.5
    want = math.exp(-t * l ** 2) * 2 * sum(MU ** (-2 * m) for m in (-0.5, 0.5))
    assert abs(weighted_trace(spec, "R", t) - want) < 1e-12


def test_trace_convergence():
    rep = trace_convergence()
    assert rep.passed, [ch.id for ch in rep.failures()]


def test_oracle_relations():
    R = su2_oracle_rep(MU, 12, 6)
    assert oracle_relation_report(R).passed


def test_oracle_gamma_alpha():
    P = su2_presentation()
    R = su2_oracle_rep(MU, 12, 6)
    p = P["gamma"] * P["alpha"]
    mask = R.interior_mask(2)
    assert (R.evaluate(p) - R.evaluate(P.normal_form(p))).interior_residual(mask) < 1e-12


def test_oracle_identity():
    P = su2_presentation()
    R = su2_oracle_rep(MU, 6, 3)
    assert np.allclose(R.evaluate(P.one()).dense(), np.eye(len(R.labels)))


def test_oracle_coherence_small():
    P = su2_presentation()
    rng = random.Random(3)
    polys = [random_ncpoly(P.gens, rng, 4, 3) for _ in range(20)]
    rep = oracle_coherence(polys, P, mu=MU)
    assert rep.passed
