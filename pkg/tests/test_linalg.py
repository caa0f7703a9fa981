from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from liekernel import linalg

F = Fraction


def test_det_of_known_matrix():
    # cofactor expansion by hand: 2(3*4-0) - 1(0*4-0) + 0 = 24
    assert linalg.det([[F(2), F(1), F(0)], [F(0), F(3), F(0)], [F(0), F(0), F(4)]]) == 24


def test_rank_and_nullspace():
    m = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(1), F(0), F(1)]]
    assert linalg.rank(m) == 2
    ns = linalg.nullspace(m, 3)
    assert len(ns) == 1
    assert all(x == 0 for x in linalg.matvec(m, ns[0]))


def test_inverse():
    m = [[F(2), F(1)], [F(1), F(1)]]
    assert linalg.matmul(m, linalg.inverse(m)) == linalg.identity(2)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4).map(F), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_sparse_rank_agrees_with_bareiss(m):
    assert linalg.rank(m) == linalg.bareiss_rank(m)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    n = len(m[0])
    assert linalg.rank(m) + len(linalg.nullspace(m, n)) == n
