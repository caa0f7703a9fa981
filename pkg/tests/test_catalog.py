from __future__ import annotations

import random
from fractions import Fraction

import pytest

from liekernel import linalg
from liekernel.catalog import (
    SP2_PRINTED, SU3_PRINTED, act_on_3form, build_hkt, build_sp2, build_su2su2, build_su3,
    compare_differentials, load_g2, nk_specs, sigma_values,
)
from liekernel.exterior import KForm, KVector
from liekernel.kernelmap import closed_contraction_check, killing_form, lie_kernel
from liekernel.liealg import betti, betti_numbers, derived_algebra, jacobi_check
from liekernel.scalars import QuadScalar


def negative_definite(m) -> bool:
    # Sylvester: leading minors of -m are positive
    neg = [[-x for x in row] for row in m]
    return all(linalg.det([row[:k] for row in neg[:k]]) > 0 for k in range(1, len(m) + 1))


def test_su3_matches_printed_differentials():
    g, _ = build_su3()
    assert jacobi_check(g) is None
    assert compare_differentials(g, SU3_PRINTED) == {}


def test_sp2_matches_printed_differentials():
    g, _ = build_sp2()
    assert jacobi_check(g) is None
    assert compare_differentials(g, SP2_PRINTED) == {}


def test_su3_trace_metric_values():
    _, rep = build_su3()
    m = rep.trace_form()
    assert m[0][0] == 2 and m[0][1] == -1 and m[2][2] == 2


@pytest.mark.parametrize("build", [lambda: build_su3()[0], lambda: build_sp2()[0], build_su2su2])
def test_compact_algebras_have_definite_killing_form(build):
    g = build()
    assert negative_definite(killing_form(g))
    assert len(derived_algebra(g)) == g.dim


def test_cohomology_of_compact_algebras():
    # H*(G) is an exterior algebra on primitive generators: degrees 3,5 for su(3), 3,7 for sp(2), 3,3 for su(2)^2
    assert betti_numbers(build_su3()[0]) == [1, 0, 0, 1, 0, 1, 0, 0, 1]
    assert betti_numbers(build_sp2()[0]) == [1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1]
    assert betti_numbers(build_su2su2()) == [1, 0, 0, 2, 0, 0, 1]


def test_g2_data():
    g = load_g2()
    assert g is not None and g.dim == 14
    assert jacobi_check(g) is None
    assert negative_definite(killing_form(g))
    assert [betti(g, k) for k in (1, 2, 3)] == [0, 0, 1]


def test_lie_kernel_dimension_of_simple_algebras():
    # the bracket Λ²g -> g is onto, so dim P = C(n,2) - n
    for g in (build_su3()[0], build_sp2()[0]):
        assert lie_kernel(g).dim == g.dim * (g.dim - 1) // 2 - g.dim


def test_hkt_quaternionic_relations():
    h = build_hkt()
    mm = linalg.matmul
    minus_id = [[QuadScalar(-int(i == j), 0, 3) for j in range(8)] for i in range(8)]
    assert mm(h.I, h.I) == minus_id and mm(h.J, h.J) == minus_id and mm(h.K, h.K) == minus_id
    assert mm(h.I, h.J) == h.K


def test_hkt_torsion_form_is_closed():
    h = build_hkt()
    assert h.c.terms and not h.algebra.d(h.c).terms


def test_act_on_3form_twice():
    h = build_hkt()
    phi = h.domega["J"]
    for s in (1, -1):
        assert act_on_3form(h.I, act_on_3form(h.I, phi, s), s) == -phi


def test_act_on_3form_identity():
    phi = KForm.basis_element(4, 0, 1, 3)
    ident = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert act_on_3form(ident, phi, 1) == phi
    with pytest.raises(ValueError):
        act_on_3form(ident, phi, 2)


def test_nk_sigma_values_nonzero():
    for spec in nk_specs():
        assert spec.algebra is not None
        assert all(x != 0 for x in sigma_values(spec))


def _kernel_element(g, P, seed):
    rng = random.Random(seed)
    cs = [Fraction(rng.randint(-3, 3)) for _ in P.basis]
    return KVector.from_vector(g.dim, 2, [sum((c * v[t] for c, v in zip(cs, P.basis)), Fraction(0))
                                          for t in range(len(P.basis[0]))])


def test_contraction_closed_for_hkt_torsion():
    h = build_hkt()
    g = h.algebra
    P = lie_kernel(g)
    for seed in range(3):
        assert closed_contraction_check(g, h.c, _kernel_element(g, P, seed), P)


def test_contraction_closed_for_g2_orbit_form():
    spec = [s for s in nk_specs() if s.name == "g2"][0]
    g = spec.algebra
    P = lie_kernel(g)
    assert closed_contraction_check(g, spec.expected_dPbeta, _kernel_element(g, P, 0), P)
