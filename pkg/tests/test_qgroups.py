from __future__ import annotations

from fractions import Fraction

import pytest

from qiso.hopf import haar_su2, hopf_axiom_suite, su2_presentation
from qiso.ncalg import CONFLUENT
from qiso.qgroups import (build_podles_xvector, check_af_level, check_irreps, check_magic_unitary,
                          check_podles_relations, check_schur, check_somu3_action_matrix,
                          check_somu3_embedding, check_umu2_action, compare_t1, dump_catalog,
                          irrep_tower, kernel_operator, load_catalog, make_algebra, podles_AB,
                          row_sos_certificate, somu3_images)
from qiso.scalar import mu, t


def _ok(rep):
    return [ch.id for ch in rep.failures()]


def test_qperm3_generators():
    P = make_algebra("QPerm", 3).pres
    a11 = P["a11"]
    assert P.reduces_to_zero(a11 * a11 - a11)
    assert P.reduces_to_zero(a11.star() - a11)
    assert P.reduces_to_zero(P["a11"] + P["a12"] + P["a13"] - 1)


def test_sumu2_catalog_entry_is_hopf():
    e = make_algebra("SUmu2")
    assert e.is_cqg
    P = e.pres
    recs = hopf_axiom_suite(e.hopf, [P["alpha"], P.mul(P["alpha"], P["gamma"])])
    assert all(r["antipode"] and r["counit"] and r["coassociativity"] for r in recs)


def test_af_level_one_point():
    e = make_algebra("AFLevel", branching=(1,))
    P = e.pres
    (name,) = [n for n in P.gens.names if P.gens.star[P.gens.index[n]] == P.gens.index[n]][:1]
    assert P.normal_form(P[name]) == P.one()


def test_somu3_embedding():
    rep = check_somu3_embedding()
    assert not _ok(rep)
    ids = [ch.id for ch in rep]
    assert any("M* M" in i or "M*M" in i for i in ids)


def test_somu3_selected_relations():
    P = su2_presentation()
    im = somu3_images(P)
    N, M, G, L = im["N"], im["M"], im["G"], im["L"]
    assert P.reduces_to_zero(P.mul(M.star(), M) - (N - P.mul(N, N)))
    assert P.reduces_to_zero(N.star() - N)
    assert P.reduces_to_zero(P.mul(M, M) - P.mul(L, G) * mu ** -1)


def test_somu3_action_matrix():
    assert not _ok(check_somu3_action_matrix())


def test_podles_xvector_involutions():
    P = su2_presentation()
    xm, x0, xp = build_podles_xvector("display")
    assert P.reduces_to_zero(x0.star() - x0)
    assert P.reduces_to_zero(xm.star() + xp * mu ** -1)


def test_podles_degenerate_xvector():
    P = su2_presentation()
    _, x0, _ = build_podles_xvector("display", rho=0)
    want = P.mul(P["gamma*"], P["alpha"]) * (-mu) - P.mul(P["gamma"], P["alpha*"])
    assert P.reduces_to_zero(x0 - want)


def test_podles_chi_relation():
    P = su2_presentation()
    xm, x0, _ = build_podles_xvector("chi")
    r = P.mul(xm, x0) - P.mul(x0, xm) * mu ** 2 - xm * ((1 - mu ** 2) * t)
    assert P.reduces_to_zero(r)


def test_podles_AB_relation():
    P = su2_presentation()
    from qiso.qgroups import podles_c
    A, B = podles_AB()
    assert P.reduces_to_zero(P.mul(B.star(), B) - (A - P.mul(A, A) + P.one() * podles_c()))


def test_kernel_operator_needs_positive_c():
    with pytest.raises(ValueError):
        kernel_operator(c=0)


def test_podles_relations_report():
    rep = check_podles_relations()
    assert not _ok(rep)
    assert len(rep) >= 15


def test_haar_cross_orthogonality():
    P = su2_presentation()
    xm, x0, xp = build_podles_xvector("chi")
    for a, b in ((xm, x0), (x0, xp), (xp, xm)):
        assert haar_su2(P.mul(a.star(), b)) == 0


def test_umu2_action():
    rep = check_umu2_action()
    assert not _ok(rep)
    assert sum(1 for ch in rep if ch.id.startswith("relation ")) == 17
    assert sum(1 for ch in rep if ch.id.startswith("Psi preserves")) == 5


def test_umu2_unitarity_identity():
    Q = make_algebra("Umu2").pres
    x = Q.mul(Q["u11"].star(), Q["u11"]) + Q.mul(Q["u12"], Q["u12"].star()) * mu ** -2 - 1
    assert Q.reduces_to_zero(x)


def test_irrep_half():
    P = su2_presentation()
    T0, Th = irrep_tower(Fraction(1, 2))
    assert T0.entries == [[P.one()]]
    want = [[P["alpha"], P["gamma*"] * (-mu)], [P["gamma"], P["alpha*"]]]
    assert Th.entries == want


def test_irreps_reports():
    assert not _ok(check_irreps(Fraction(3, 2)))
    assert not _ok(compare_t1())


def test_schur_orthogonality():
    assert not _ok(check_schur(Fraction(1)))


def test_magic_unitary_small():
    for n in (1, 2, 3):
        assert not _ok(check_magic_unitary(n)), n
    P = make_algebra("QPerm", 2).pres
    assert P.reduces_to_zero(P.mul(P["a11"], P["a12"]))


def test_magic_unitary_four_orthogonality_not_reduced():
    rep = check_magic_unitary(4)
    bad = _ok(rep)
    assert bad == ["row orthogonality reduces"]
    assert rep["row orthogonality positivity certificate"].ok


def test_row_sos_certificate():
    for n in (2, 3, 4, 5):
        ok, status = row_sos_certificate(n)
        assert ok, n


@pytest.mark.parametrize("br", [(2,), (1, 1), (2, 1), (3, 2)])
def test_af_levels(br):
    assert not _ok(check_af_level(br))


def test_catalog_roundtrip():
    specs = (("SUmu2", {}), ("QPerm", {"n": 2}))
    text = dump_catalog(specs)
    pres = load_catalog(text)
    assert set(pres) == {"SUmu2", "QPerm"}
    assert pres["SUmu2"].status == CONFLUENT
    assert dump_catalog(specs) == text
