from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from liekernel.catalog import build_su2su2, build_su3
from liekernel.exterior import KForm, KVector, contract, vector
from liekernel.gradings import family
from liekernel.kernelmap import (
    closed_contraction_check, dP, kernel_dimension_identity, lie_kernel, restrict_to_P,
    symmetry_contraction_differential,
)
from liekernel.liealg import betti, closed_forms
from liekernel.notation import parse
from liekernel.tables import GRADED, SOLVABLE, sample_params

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@cache
def pool() -> tuple:
    algs = [parse(e.structure).bind({}) for e in GRADED.values()]
    for e in SOLVABLE.values():
        algs += [parse(e.structure).bind(b) for b in (sample_params(e, 2) if e.params else [{}])]
    algs += [family("f1", 6), family("f2", 7), family("f3", 7), build_su2su2(), build_su3()[0]]
    return tuple(g for g in algs if g.dim >= 3)


algebras = st.integers(min_value=0, max_value=10_000).map(lambda i: pool()[i % len(pool())])


def random_form(draw, n, k, coeffs):
    keys = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True), max_size=6))
    out = KForm.zero(n, k)
    for key in keys:
        out = out + KForm.basis_element(n, *sorted(key)) * draw(coeffs)
    return out


def combination(draw, vectors, coeffs):
    if not vectors:
        return None
    n = len(vectors[0])
    cs = [draw(coeffs) for _ in vectors]
    return [sum((c * v[t] for c, v in zip(cs, vectors)), Fraction(0)) for t in range(n)]


@settings(max_examples=60, deadline=None, derandomize=True)
@given(g=algebras, data=st.data())
def test_d_squared_vanishes(g, data):
    k = data.draw(st.integers(0, min(g.dim - 2, 4)))
    phi = random_form(data.draw, g.dim, k, small_rationals) if k else KForm.zero(g.dim, 0)
    assert not g.d(g.d(phi)).terms


@settings(max_examples=100, deadline=None, derandomize=True)
@given(g=algebras, data=st.data())
def test_contraction_of_closed_3form_by_kernel_element_is_closed(g, data):
    P = lie_kernel(g)
    closed = closed_forms(g, 3)
    if not P.dim or not closed:
        return
    c = KForm.from_vector(g.dim, 3, combination(data.draw, closed, small_rationals))
    p = KVector.from_vector(g.dim, 2, combination(data.draw, P.basis, small_rationals))
    assert closed_contraction_check(g, c, p, P)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(g=algebras, data=st.data())
def test_contraction_differential_identity(g, data):
    # for arbitrary c and p: d(p⌟c) = p⌟dc + [p]⌟c, with [X∧Y] = [X,Y]
    n = g.dim
    c = random_form(data.draw, n, 3, small_rationals)
    p = KVector.zero(n, 2)
    for i, j in data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4)):
        if i != j:
            p = p + KVector.basis_element(n, min(i, j), max(i, j)) * data.draw(small_rationals)
    br = [Fraction(0)] * n
    for (i, j), v in p.terms.items():
        e = lambda k: [Fraction(int(t == k)) for t in range(n)]  # noqa: E731
        br = [x + v * y for x, y in zip(br, g.bracket_vec(e(i), e(j)))]
    assert symmetry_contraction_differential(g, c, p) == contract(p, g.d(c)) + contract(vector(n, br), c)


@settings(max_examples=50, deadline=None, derandomize=True)
@given(g=algebras, data=st.data())
def test_dP_is_independent_of_representative(g, data):
    beta = random_form(data.draw, g.dim, 2, small_rationals)
    shift = random_form(data.draw, g.dim, 1, small_rationals)
    other = beta + g.d(shift)
    assert restrict_to_P(g, beta) == restrict_to_P(g, other)
    assert dP(g, beta) == dP(g, other)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(n=st.integers(1, 8), data=st.data())
def test_betti_of_abelian_algebra(n, data):
    g = parse(f"(0^{n})").bind({})
    k = data.draw(st.integers(0, n))
    assert betti(g, k) == comb(n, k)


@settings(max_examples=80, deadline=None, derandomize=True)
@given(g=algebras)
def test_kernel_plus_derived_dimension(g):
    assert kernel_dimension_identity(g)
