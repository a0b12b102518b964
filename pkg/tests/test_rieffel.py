from __future__ import annotations

from fractions import Fraction

import pytest

from qiso.rieffel import (EXPECTED_BLOCK_EXPONENTS, JTILDE_DEFAULT, DeformMatrix, GradedGen,
                          GradedMonomial, block_generators, check_torus_relations, deformed_product,
                          nc_torus_presentation, phase_exponent, qiso_atheta_block_table,
                          theta_sphere_presentation, torus_deform_matrix)
from qiso.scalar import one, phase


U = GradedGen("U", (1, 0))
V = GradedGen("V", (0, 1))


def test_torus_commutation_phase():
    J = torus_deform_matrix(2)
    uv = deformed_product(GradedMonomial.of(U), GradedMonomial.of(V), J)
    vu = deformed_product(GradedMonomial.of(V), GradedMonomial.of(U), J)
    assert uv.coeff == vu.coeff * phase(2)


def test_zero_deformation():
    J0 = DeformMatrix(((0, 0), (0, 0)))
    x = GradedMonomial.of(U, V)
    y = GradedMonomial.of(V)
    assert deformed_product(x, y, J0) == x * y


def test_deformation_is_skew():
    with pytest.raises(ValueError):
        DeformMatrix(((0, 1), (1, 0)))


def test_phase_exponent_bilinear():
    J = torus_deform_matrix(2)
    assert phase_exponent(J, (1, 0), (0, 1)) == -phase_exponent(J, (0, 1), (1, 0))
    assert phase_exponent(J, (2, 0), (0, 3)) == 6 * phase_exponent(J, (1, 0), (0, 1))


def test_torus_presentation():
    P = nc_torus_presentation(2)
    U1, U2 = P["U1"], P["U2"]
    assert P.reduces_to_zero(U1 * U2 - U2 * U1 * phase(2))
    assert P.reduces_to_zero(U1 * P["U1*"] - 1)


def test_torus_presentation_theta_zero_commutative():
    J0 = DeformMatrix(((0, 0), (0, 0)))
    P = nc_torus_presentation(2, J0)
    assert P.reduces_to_zero(P["U1"] * P["U2"] - P["U2"] * P["U1"])


def test_torus_suite():
    rep = check_torus_relations(2, torus_deform_matrix(2), 2)
    assert rep.passed, [c.id for c in rep.failures()]


def test_theta_sphere_circle():
    P = theta_sphere_presentation(1)
    assert P.reduces_to_zero(P["z1"] * P["zb1"] - 1)
    assert P.reduces_to_zero(P["zb1"] * P["z1"] - P["z1"] * P["zb1"])


def test_theta_sphere_relations():
    P = theta_sphere_presentation(2)
    z1, z2, zb1, zb2 = P["z1"], P["z2"], P["zb1"], P["zb2"]
    assert P.reduces_to_zero(z1 * z2 - z2 * z1 * phase(2))
    assert P.reduces_to_zero(zb1 * z2 - z2 * zb1 * phase(-2))


def test_block_table_default_convention():
    assert JTILDE_DEFAULT == "minus-plus"
    rep = qiso_atheta_block_table()
    assert rep.passed, [c.id for c in rep.failures()]
    assert len(rep.meta["commutative_blocks"]) == 4


def test_block_table_other_convention_differs():
    rep = qiso_atheta_block_table("plus-minus")
    assert not rep.passed


@pytest.mark.parametrize("g", [(0, 0, 0), (0, 0, 1)])
def test_block_phases(g):
    J = torus_deform_matrix(2)
    A, B = block_generators(g)
    ab = deformed_product(GradedMonomial.of(A), GradedMonomial.of(B), J)
    ba = deformed_product(GradedMonomial.of(B), GradedMonomial.of(A), J)
    assert ab.coeff == ba.coeff * phase(2 * EXPECTED_BLOCK_EXPONENTS[g])


def test_block_unitary():
    J = torus_deform_matrix(2)
    A, _ = block_generators((1, 0, 1))
    a = GradedMonomial.of(A)
    u = deformed_product(a.star(), a, J)
    assert u.coeff == one() and not u.exponents()


def test_block_split():
    vals = list(EXPECTED_BLOCK_EXPONENTS.values())
    assert vals.count(0) == 4 and vals.count(-2) == 4
    assert all(Fraction(v) in (0, -2) for v in vals)
