from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from liekernel.liealg import (
    JacobiError, betti_numbers, classify, derived_algebra, extend_by_derivation,
    induced_cohomology_det, is_23_trivial, is_unimodular, jacobi_check, structure_theorem_check,
)
from liekernel.notation import parse

F = Fraction


def alg(text, **params):
    return parse(text).bind({k: F(v) for k, v in params.items()})


def test_heisenberg_betti():
    # H^*(h3) = 1, 2, 2, 1 (Poincaré duality, b1 = dim of the abelianisation)
    assert betti_numbers(alg("(0,0,12)")) == [1, 2, 2, 1]


def test_su2_betti():
    # compact simple: b1 = b2 = 0, b3 = 1
    assert betti_numbers(alg("(23,31,12)")) == [1, 0, 0, 1]


def test_abelian_betti():
    assert betti_numbers(alg("(0^4)")) == [comb(4, k) for k in range(5)]


def test_two_dimensional_nonabelian():
    g = alg("(0,21)")
    assert betti_numbers(g) == [1, 1, 0]
    c = classify(g)
    assert c.is_solvable and not c.is_nilpotent and not c.is_unimodular


def test_jacobi_failure_has_witness():
    # d(e^2 ∧ e^4) = -e^2 ∧ e^1 ∧ e^3 is not zero
    with pytest.raises(JacobiError):
        alg("(0,0,12,13,24)")
    wit = jacobi_check(parse("(0,0,12,13,24)").bind({}, check=False))
    assert wit["form"] == "e^5"


def test_r3_lambda_at_two_is_23_trivial():
    assert is_23_trivial(alg("(0,21,l.31)", l=2))


def test_r3_lambda_at_minus_one_is_not():
    # lambda = -1 makes the algebra unimodular and b2 + b3 > 0
    g = alg("(0,21,l.31)", l=-1)
    assert is_unimodular(g) and not is_23_trivial(g)


def test_derived_algebra_dimension():
    assert len(derived_algebra(alg("(0,21+31,31)"))) == 2


def test_extension_by_diagonal_derivation():
    k = alg("(0^2)")
    D = [[F(1), F(0)], [F(0), F(2)]]
    g = extend_by_derivation(k, D)
    assert g == alg("(0,21,2.31)")


def test_induced_determinant_on_abelian_k():
    # k = R^2, D = diag(1, l): H^1 = k*, det = l; H^2 = Λ²k*, det = 1 + l
    k = alg("(0^2)")
    D = [[F(1), F(0)], [F(0), F(3)]]
    assert induced_cohomology_det(k, D, 1) == 3
    assert induced_cohomology_det(k, D, 2) == 4


def test_structure_theorem_on_r3():
    assert structure_theorem_check(alg("(0,21+31,31)"), "r3").ok
