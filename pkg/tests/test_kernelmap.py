from __future__ import annotations

from fractions import Fraction

import pytest

from liekernel.exterior import KForm, KVector, contract
from liekernel.kernelmap import (
    PreconditionError, Subspace, ad_on_bivector, closed_contraction_check, dP, kernel_dimension_identity,
    lie_kernel, multimoment_kernel, orthogonal_P_representative, restrict_to_P, stabilizer,
)
from liekernel.notation import parse

F = Fraction


def alg(text):
    return parse(text).bind({})


def test_kernel_of_heisenberg():
    g = alg("(0,0,12)")
    P = lie_kernel(g)
    # [e1,e2] = -e3 spans the image; kernel = span(e1^e3, e2^e3)
    assert P.dim == 2
    assert P == Subspace.span("L2g", 3, [[F(0), F(1), F(0)], [F(0), F(0), F(1)]])


def test_kernel_of_abelian_is_everything():
    assert lie_kernel(alg("(0^4)")).dim == 6


def test_kernel_of_su2_is_zero():
    assert lie_kernel(alg("(23,31,12)")).dim == 0


def test_dimension_identity():
    for t in ("(0,0,12)", "(23,31,12)", "(0,21+31,31)", "(0^2,12,13,14+23,24+15)"):
        assert kernel_dimension_identity(alg(t))


def test_functional_equality_ignores_exact_shift():
    g = alg("(0,0,12)")
    om = KForm.basis_element(3, 0, 2)
    shifted = om + g.d(KForm.basis_element(3, 2)) * 5
    assert restrict_to_P(g, om) == restrict_to_P(g, shifted)
    assert dP(g, om) == dP(g, shifted)


def test_functional_rejects_outside_P():
    g = alg("(0,0,12)")
    nu = restrict_to_P(g, KForm.basis_element(3, 0, 2))
    with pytest.raises(PreconditionError):
        nu(KVector.basis_element(3, 0, 1))


def test_ad_on_bivector_derivation_rule():
    g = alg("(23,31,12)")
    a = [F(1), F(0), F(0)]
    p = KVector.basis_element(3, 1, 2)
    out = ad_on_bivector(g, a, p)
    x = g.bracket_vec(a, [F(0), F(1), F(0)])
    y = g.bracket_vec(a, [F(0), F(0), F(1)])
    from liekernel.exterior import vector, wedge
    expect = wedge(vector(3, x), KVector.basis_element(3, 2)) + wedge(KVector.basis_element(3, 1), vector(3, y))
    assert out == expect


def test_stabilizer_of_zero_functional_is_everything():
    g = alg("(0,0,12)")
    assert stabilizer(g, restrict_to_P(g, KForm.zero(3, 2))).dim == 3


def test_multimoment_kernel_abelian():
    g = alg("(0^4)")
    c = KForm.basis_element(4, 0, 1, 2)
    # <c, p ∧ A> = 0 for all p in Λ²: A must be e4
    assert multimoment_kernel(g, c) == Subspace.span("g", 4, [[F(0), F(0), F(0), F(1)]])


def test_closed_contraction_preconditions():
    g = alg("(0,0,12)")
    with pytest.raises(PreconditionError):
        closed_contraction_check(g, KForm.basis_element(3, 2), KVector.basis_element(3, 0, 2))
    c = KForm.basis_element(3, 0, 1)
    assert closed_contraction_check(g, c, KVector.basis_element(3, 0, 2))


def test_orthogonal_representative_restricts_identically():
    g = alg("(0,0,12)")
    metric = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    om = KForm.basis_element(3, 0, 1) * 2 + KForm.basis_element(3, 1, 2)
    rep = orthogonal_P_representative(g, metric, om)
    assert restrict_to_P(g, rep) == restrict_to_P(g, om)
    # e^{12} = -de^3 is exact, so it is projected away
    assert (0, 1) not in rep.terms


def test_contraction_uses_symmetry_fields():
    # h3 + R: c = e^134 is closed and e1∧e3 lies in P, yet the left-invariant
    # one-form c(e1, e3, ·) = e^4 has de^4 = e^12 != 0; the symmetry fields of
    # left translation give a closed one-form
    g = alg("(0^3,-21)")
    c = KForm.basis_element(4, 0, 2, 3)
    p = KVector.basis_element(4, 0, 2)
    assert g.d(contract(p, c)).terms
    assert closed_contraction_check(g, c, p)
