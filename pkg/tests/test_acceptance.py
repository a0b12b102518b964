"""Acceptance criteria 1-13, one pass/fail line each.

Runtime-bounded criteria are timed on a fresh interpreter running the CLI
suite, so that in-process caches from other tests do not flatter them.
"""

from __future__ import annotations

import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import record

from qiso.freewords import closed_form_suite, no_action_witness
from qiso.hopf import (basis_by_length, haar_invariance_check, haar_su2, hopf_axiom_suite,
                       su2_hopf, su2_presentation)
from qiso.ncalg import CONFLUENT, NCPoly, Presentation, random_ncpoly
from qiso.qgroups import (check_af_level, check_irreps, check_magic_unitary, check_podles_relations,
                          check_schur, check_somu3_action_matrix, check_somu3_embedding,
                          check_umu2_action, compare_t1, irrep_tower, make_algebra)
from qiso.repnum import (build_cp, cp_relation_residuals, cp_structure_checks, haar_closed_form_suite,
                         oracle_coherence, su2_oracle_rep)
from qiso.rieffel import check_torus_relations, qiso_atheta_block_table, torus_deform_matrix
from qiso.scalar import mu

SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")


def cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    t0 = time.perf_counter()
    r = subprocess.run([sys.executable, "-m", "qiso", *args, "--format", "json"],
                       capture_output=True, env=env)
    dt = time.perf_counter() - t0
    return r.returncode, r.stdout, dt


def failed_ids(rep):
    return [ch.id for ch in rep.failures()]


def test_criterion_01_su2_engine():
    t0 = time.perf_counter()
    base = su2_presentation(8)
    P = Presentation("SUmu2", base.gens, base.relations, degree_bound=8)
    confluent = P.status == CONFLUENT
    a, a_, g_, g = P["alpha"], P["alpha*"], P["gamma*"], P["gamma"]
    rules = (P.normal_form(g * a) == a * g * mu ** -1
             and P.normal_form(a_ * a) == P.normal_form(1 - g_ * g)
             and P.normal_form(a * a_) == P.normal_form(1 - mu ** 2 * g_ * g))
    rels = len(P.relations) == 5 and all(P.reduces_to_zero(r) for _, r in P.relations)
    rng = random.Random(20240611)
    bad = 0
    for _ in range(500):
        x, y, z = (P.normal_form(random_ncpoly(P.gens, rng, 4, 3)) for _ in range(3))
        if P.mul(P.mul(x, y), z) != P.mul(x, P.mul(y, z)):
            bad += 1
        if P.normal_form(P.mul(x, y).star()) != P.mul(P.normal_form(y.star()), P.normal_form(x.star())):
            bad += 1
    dt = time.perf_counter() - t0
    ok = confluent and rules and rels and bad == 0 and dt < 30
    record(1, ok, f"SU_mu(2) confluent at bound 8 with expected rules, 5 relations -> 0, "
                  f"500 random checks ({bad} failures), {dt:.1f} s < 30 s")
    assert ok


def test_criterion_02_hopf_axioms():
    code, out, dt = cli("--suite", "hopf-axioms", "--degree", "4")
    doc = json.loads(out)
    H = su2_hopf()
    P = H.pres
    words = basis_by_length(P, 4)
    recs = hopf_axiom_suite(H, [NCPoly.word(P.gens, w) for w in words])
    su2_ok = all(r["coassociativity"] and r["counit"] and r["antipode"] for r in recs)
    U = make_algebra("Umu2")
    Q = U.pres
    kappa = U.hopf.antipode(Q["u11"]) == Q.normal_form(Q["u22"] * Q["Dinv"])
    ok = code == 0 and doc["summary"]["failed"] == 0 and su2_ok and kappa and dt < 60
    record(2, ok, f"Hopf axioms on {len(words)} SU_mu(2) monomials and U_mu(2) generators, "
                  f"kappa(u11) = u22 D^-1, CLI {dt:.1f} s < 60 s")
    assert ok


def test_criterion_03_haar():
    P = su2_presentation()
    gg = P.mul(P["gamma*"], P["gamma"])
    x, table = P.one(), True
    for k in range(7):
        table = table and haar_su2(x) == (1 - mu ** 2) / (1 - mu ** (2 * k + 2))
        x = P.mul(x, gg)
    inv = haar_invariance_check(4)
    inv_ok = bool(inv) and all(ok for _, ok in inv)
    ok = table and inv_ok
    record(3, ok, f"h((gamma* gamma)^k) exact for k <= 6; bilateral invariance on {len(inv)} monomials")
    assert ok


def test_criterion_04_corepresentations():
    code, out, dt = cli("--suite", "irreps", "--lmax", "3/2")
    P = su2_presentation()
    Th = irrep_tower(Fraction(1, 2))[1]
    half = Th.entries == [[P["alpha"], P["gamma*"] * (-mu)], [P["gamma"], P["alpha*"]]]
    t1 = compare_t1().passed
    schur = check_schur(Fraction(3, 2)).passed
    tower = check_irreps(Fraction(3, 2)).passed
    ok = code == 0 and half and t1 and schur and tower and dt < 300
    record(4, ok, f"T^1/2 exact, T^1 matches display up to normalization, Schur orthogonality "
                  f"for l <= 3/2, CLI {dt:.1f} s < 300 s")
    assert ok


def test_criterion_05_somu3():
    emb = check_somu3_embedding()
    act = check_somu3_action_matrix()
    n = len(emb)
    ok = emb.passed and act.passed and n >= 18
    record(5, ok, f"SO_mu(3): {n - len(emb.failures())}/{n} relations vanish under the embedding "
                  f"(relation list split into single equations), action matrix identity exact")
    assert ok, failed_ids(emb) + failed_ids(act)


def test_criterion_06_podles():
    rep = check_podles_relations()
    ids = [ch.id for ch in rep]
    counts = (sum(i.startswith("chi-") for i in ids),
              sum(i in ("A* = A", "AB - mu^-2 BA", "B*B - A + A^2 - c", "BB* - mu^2 A + mu^4 A^2 - c")
                  for i in ids),
              sum("X_c" in i for i in ids),
              sum(i in ("x0* = x0", "x-1* = -mu^-1 x1") for i in ids),
              sum(i in ("h(x_-1* x_0) = 0", "h(x_0* x_1) = 0", "h(x_1* x_-1) = 0") for i in ids))
    ok = rep.passed and counts == (4, 4, 3, 2, 3)
    record(6, ok, "Podles: 4 chi-relations, 4 A,B relations, 3 X_c kernel conditions, involutions, "
                  "cross Haar values 0, exact")
    assert ok, failed_ids(rep)


def test_criterion_07_podles_numerics():
    code, out, dt = cli("--suite", "podles-numeric", "--mu", "0.5", "--c", "0.3", "--nmax", "64")
    doc = json.loads(out)
    T = build_cp(0.5, 0.3, 64)
    rel = cp_relation_residuals(T, 1e-12)
    st = cp_structure_checks(T, 1e-12)
    haar = haar_closed_form_suite(0.5, 0.3, 1e-9)
    hA = haar["h(A) = 1/(1+mu^2)"]
    hA2 = haar["h(A^2) closed form"]
    routes = [ch for ch in haar if "three routes" in ch.id]
    btau = st["B = tau |B|"]
    ok = (code == 0 and doc["summary"]["failed"] == 0 and rel.passed and btau.ok and btau.residual < 1e-12
          and hA.residual < 1e-10 and hA2.residual < 1e-10 and len(routes) == 3
          and all(ch.residual < 1e-9 for ch in routes) and dt < 10)
    record(7, ok, f"h(A) err {hA.residual:.1e}, h(A^2) err {hA2.residual:.1e}, three routes "
                  f"max {max(ch.residual for ch in routes):.1e}, CP interior residuals < 1e-12, "
                  f"CLI {dt:.1f} s < 10 s")
    assert ok


def test_criterion_08_umu2():
    code, out, dt = cli("--suite", "umu2-action")
    rep = check_umu2_action()
    rels = [ch for ch in rep if ch.id.startswith("relation ")]
    psi = [ch for ch in rep if ch.id.startswith("Psi preserves")]
    ok = (code == 0 and len(rels) == 17 and all(ch.ok for ch in rels) and len(psi) == 5
          and all(ch.ok for ch in psi) and dt < 120)
    record(8, ok, f"U_mu(2): 17 substituted relations reduce to 0, Psi preserves 5 relations, "
                  f"CLI {dt:.1f} s < 120 s")
    assert ok, failed_ids(rep)


def test_criterion_09_rieffel():
    tor = check_torus_relations(2, torus_deform_matrix(2), 2)
    tab = qiso_atheta_block_table()
    ok = tor.passed and tab.passed and len(tab.meta["commutative_blocks"]) == 4
    record(9, ok, "A_theta from x_theta/2, x_J then x_-J undeformed, eight-block table "
                  "C(T^2)^4 + A_2theta^4 with phases {1, e(-2 theta)}, symbolic theta")
    assert ok, failed_ids(tor) + failed_ids(tab)


def test_criterion_10_qiso_cp():
    cf = closed_form_suite(mu=0.5, c=0.3, N_max=40, tol=1e-12)
    w = no_action_witness(1 / 3, N_max=40, tol=1e-12)
    norms = w["column norms = |1 - e(theta)| for interior n >= 2"]
    ok = cf.passed and w.passed and abs(abs(1 - complex(math.cos(2 * math.pi / 3),
                                                          math.sin(2 * math.pi / 3))) - math.sqrt(3)) < 1e-15
    record(10, ok, f"ad_V closed forms on N_max = 40 interior, q-_n = q+_n y, y_n constant; "
                   f"witness column norms = sqrt 3 (err {norms.residual:.1e})")
    assert ok, failed_ids(cf) + failed_ids(w)


def test_criterion_11_oracle_coherence():
    P = su2_presentation()
    rng = random.Random(11)
    polys = [random_ncpoly(P.gens, rng, 4, 4) for _ in range(200)]
    R = su2_oracle_rep(0.5, 16, 8)
    rep = oracle_coherence(polys, P, R, tol=1e-10)
    worst = max(ch.residual for ch in rep)
    ok = rep.passed and len(rep) == 200
    record(11, ok, f"200 random polynomials, oracle(normal_form(p)) = oracle(p) on interior, "
                   f"max error {worst:.1e} <= 1e-10")
    assert ok, failed_ids(rep)


def test_criterion_12_wang_af():
    reps = {n: check_magic_unitary(n) for n in range(1, 5)}
    afs = {br: check_af_level(br) for br in ((2,), (2, 1), (3, 2))}
    sums = all(ch.ok for r in reps.values() for ch in r if "sum" in ch.id)
    orth = {n: r["row orthogonality reduces"].ok for n, r in reps.items()}
    cert = all(r["row orthogonality positivity certificate"].ok for r in reps.values())
    af = all(r.passed for r in afs.values())
    ok = sums and all(orth.values()) and af
    bad = [n for n, v in orth.items() if not v]
    record(12, ok, f"magic-unitary sums reduce for n <= 4; row orthogonality reduces for "
                   f"n in {[n for n, v in orth.items() if v]}, not for {bad} (positivity certificate "
                   f"{'holds' if cert else 'fails'}); AF (2), (2,1), (3,2) {'pass' if af else 'fail'}")
    assert ok


def test_criterion_13_determinism():
    suites = [("qiso-cp",), ("podles-numeric",), ("su2-core", "--degree", "3"), ("wang-af",)]
    same = []
    for s in suites:
        args = ("--suite",) + s
        _, a, _ = cli(*args)
        _, b, _ = cli(*args)
        same.append(a == b and len(a) > 0)
    ok = all(same)
    record(13, ok, f"byte-identical JSON across repeated CLI runs for {len(suites)} suites")
    assert ok
