from __future__ import annotations

from fractions import Fraction

import pytest

from liekernel.scalars import FieldMismatchError, Poly, QuadScalar, field_ops, to_rational
from liekernel.notation import parse_coeff

S3 = QuadScalar.sqrt(3)


def test_sqrt3_squares_to_three():
    assert S3 * S3 == 3


def test_inverse_of_one_plus_sqrt3():
    # (1 + sqrt3)(-1/2 + sqrt3/2) = -1/2 + 3/2 + sqrt3/2 - sqrt3/2 = 1
    x = QuadScalar(1, 1, 3)
    assert x.inverse() == QuadScalar(Fraction(-1, 2), Fraction(1, 2), 3)
    assert x * x.inverse() == 1


def test_gaussian_units():
    i = QuadScalar(0, 1, -1)
    assert i * i == -1
    assert i ** 4 == 1


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        field_ops(QuadScalar(1, 1, 3), QuadScalar(1, 1, -1), "add")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QuadScalar(0, 0, 3).inverse()


def test_sign():
    assert QuadScalar(2, -1, 3).sign() == 1      # 2 - 1.732
    assert QuadScalar(1, -1, 3).sign() == -1     # 1 - 1.732
    assert QuadScalar(-2, 1, 3).sign() == -1
    assert QuadScalar(0, 0, 3).sign() == 0


def test_to_rational():
    assert to_rational("-3/4") == Fraction(-3, 4)
    assert to_rational(5) == 5


def test_poly_evaluation_and_arithmetic():
    l = Poly.var("l")
    p = (l + Poly.const(1)) * (l + Poly.const(2))
    assert p.evaluate({"l": Fraction(3)}) == 20
    assert p.params() == {"l"}
    assert (p - p).terms == ()


def test_coefficient_expressions():
    e = parse_coeff("(1+l)*2")
    assert e.evaluate({"l": Fraction(1, 2)}) == 3
    assert parse_coeff("l1^2*l2").evaluate({"l1": Fraction(2), "l2": Fraction(3)}) == 12
