from __future__ import annotations

from fractions import Fraction

import pytest

from liekernel.gradings import (
    ConstraintError, GradingError, f3_derived, f3_grading, family, find_positive_grading,
    fourier_motzkin_feasible, grading_extension, table_entry, validate_grading,
)
from liekernel.liealg import betti_numbers, is_23_trivial, is_unimodular
from liekernel.notation import parse

F = Fraction


def alg(text):
    return parse(text).bind({})


def test_find_grading_small():
    assert list(find_positive_grading(alg("(0^2,12)")).weights) == [1, 1, 2]


def test_find_grading_filiform_example():
    assert list(find_positive_grading(alg("(0^2,12,13,14+23,24+15)")).weights) == [1, 2, 3, 4, 5, 6]


def test_abelian_all_ones():
    assert list(find_positive_grading(alg("(0^3)")).weights) == [1, 1, 1]


def test_no_grading_raises_for_non_nilpotent():
    with pytest.raises(GradingError):
        find_positive_grading(alg("(0,21)"))


def test_validate():
    assert validate_grading(alg("(0^2,12)"), [1, 1, 2])
    assert not validate_grading(alg("(0^2,12)"), [1, 1, 1])
    assert validate_grading(alg("(0^2,12,13,14+23,34+52)"), [1, 2, 3, 4, 5, 7])
    with pytest.raises(GradingError):
        validate_grading(alg("(0^2,12)"), [1, 1])


def test_fourier_motzkin():
    # x >= 1, y >= 1, x + y <= 1 is infeasible; dropping the last row is feasible
    rows = [[F(1), F(0)], [F(0), F(1)], [F(-1), F(-1)]]
    assert not fourier_motzkin_feasible(rows, [F(1), F(1), F(-1)])
    assert fourier_motzkin_feasible(rows[:2], [F(1), F(1)])


def test_extension_of_12():
    ext = grading_extension(alg("(0^2,12)"), [1, 1, 2])
    # de^4 = e^2 ∧ e^3 from k, plus 2 e^4 ∧ e^1 from ad_A
    assert ext == alg("(0,21,31,2.41+23)")
    assert is_23_trivial(ext)


def test_extension_of_line():
    assert grading_extension(alg("(0)"), [1]) == alg("(0,21)")


def test_family_rn():
    assert family("r_n", 3) == alg("(0,21+31,31)")


def test_family_f1_is_p5_at_one():
    assert family("f1", 5) == table_entry("T3", "p5.lambda", {"l": 1}).algebra


def test_family_d_n_sample():
    g = family("d_n", 6, {"l": [2, 3, 5]})
    assert is_23_trivial(g)


def test_family_constraint_named():
    with pytest.raises(ConstraintError) as exc:
        family("r_nk", 6, {"k": 3, "l": F(-1, 2)})
    assert "l != 0,-1,-2,-1/2" in str(exc.value.violated)


def test_f3_derived_grading():
    for n in (5, 7, 9):
        assert validate_grading(f3_derived(n), f3_grading(n))
        assert is_23_trivial(family("f3", n))


def test_table_lookup():
    assert table_entry("T2", "r4").algebra == alg("(0,21+31,31+41,41)")
    res = table_entry("T3", "d5_2.lambda", {"l": -4})
    assert res.admissible and is_unimodular(res.algebra)
    res = table_entry("T2", "r3.lambda", {"l": 0})
    assert not res.admissible and res.violated[0][0] == "l != -1,0"
    with pytest.raises(KeyError):
        table_entry("T2", "nonexistent")


def test_betti_of_lambda_two():
    assert betti_numbers(table_entry("T2", "r3.lambda", {"l": 2}).algebra)[:4] == [1, 1, 0, 0]
