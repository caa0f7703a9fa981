from __future__ import annotations

from fractions import Fraction

from liekernel.gradings import entry_split
from liekernel.liealg import induced_cohomology_det
from liekernel.notation import parse
from liekernel.tables import (
    GRADED, MAX_HEIGHT, SOLVABLE, admissible, parse_grading_text, sample_on_hypersurface,
    sample_params, violated_constraints,
)


def test_counts():
    assert len(GRADED) == 50
    assert sum(e.table == "T2" for e in SOLVABLE.values()) == 10


def test_grading_text():
    assert parse_grading_text("1^223") == [1, 1, 2, 3]
    assert parse_grading_text("12345") == [1, 2, 3, 4, 5]
    assert parse_grading_text("1^32^2") == [1, 1, 1, 2, 2]


def test_grading_lengths_match_dimensions():
    for e in GRADED.values():
        assert len(e.grading) == parse(e.structure).dim, e.id


def test_sampling_is_seeded_and_admissible():
    e = SOLVABLE["T3.r5.lambda3"]
    a = sample_params(e, 5)
    assert a == sample_params(e, 5)
    for b in a:
        assert admissible(e, b)
        assert all(abs(x.numerator) <= MAX_HEIGHT and x.denominator <= MAX_HEIGHT for x in b.values())


def test_constraint_violation_named():
    e = SOLVABLE["T2.r3.lambda"]
    assert violated_constraints(e, {"l": Fraction(-1)}) == [("l != -1,0", "l+1")]


def test_hypersurface_samples():
    e = SOLVABLE["T3.d5.lambda2"]
    for b in sample_on_hypersurface(e, "2+2*l1+l2", 4):
        assert 2 + 2 * b["l1"] + b["l2"] == 0


def test_r4_lambda_determinants_by_hand():
    # k = R^3, D = [[1,0,0],[0,l,1],[0,0,l]] in the basis e2,e3,e4 (Jordan block)
    # det on H^1 = l^2, on H^2 = Λ²: eigenvalues 1+l, 1+l, 2l -> (1+l)^2 * 2l, on H^3: 1+2l
    e = SOLVABLE["T2.r4.lambda"]
    l = Fraction(3)
    k, D = entry_split(parse(e.structure).bind({"l": l}))
    assert [induced_cohomology_det(k, D, i) for i in (1, 2, 3)] == [l * l, (1 + l) ** 2 * 2 * l, 1 + 2 * l]
