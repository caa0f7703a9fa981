from __future__ import annotations

from fractions import Fraction

import pytest

from liekernel.exterior import KForm, KVector, contract, induced_gram, pair, pullback, wedge

F = Fraction


def e(n, *idx):
    return KForm.basis_element(n, *idx)


def v(n, *idx):
    return KVector.basis_element(n, *idx)


def test_wedge_anticommutes_on_one_forms():
    a, b = e(3, 0), e(3, 1)
    assert wedge(a, b) == -wedge(b, a)
    assert not wedge(a, a).terms


def test_determinant_pairing():
    # <e^1 ∧ e^2, e_1 ∧ e_2> = 1, no 1/2 factor
    assert pair(wedge(e(3, 0), e(3, 1)), wedge(v(3, 0), v(3, 1))) == 1
    assert pair(wedge(e(3, 0), e(3, 1)), wedge(v(3, 1), v(3, 0))) == -1


def test_contraction_adjoint_to_wedge():
    c = wedge(wedge(e(4, 0), e(4, 1)), e(4, 2)) + wedge(wedge(e(4, 1), e(4, 2)), e(4, 3)) * 2
    p = wedge(v(4, 1), v(4, 2))
    for j in range(4):
        assert pair(contract(p, c), v(4, j)) == pair(c, wedge(p, v(4, j)))


def test_contract_degree_error():
    with pytest.raises(ValueError):
        contract(wedge(v(3, 0), v(3, 1)), e(3, 0))


def test_pullback_by_swap():
    swap = [[F(0), F(1)], [F(1), F(0)]]
    assert pullback(swap, wedge(e(2, 0), e(2, 1))) == -wedge(e(2, 0), e(2, 1))


def test_induced_gram_identity():
    g = [[F(int(i == j)) for j in range(4)] for i in range(4)]
    G2 = induced_gram(g, 2)
    assert G2 == [[F(int(i == j)) for j in range(6)] for i in range(6)]


def test_json_round_trip():
    a = wedge(e(3, 0), e(3, 2)) * F(3, 2)
    assert KForm.from_json(3, a.to_json()) == a
