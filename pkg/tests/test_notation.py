from __future__ import annotations

from fractions import Fraction

import pytest

from liekernel.notation import (
    NotationError, SchemaError, algebra_from_json, format_algebra, from_json, parse, print_algebra, to_json,
)
from liekernel.tables import GRADED, PRINTED_D5P_LAMBDA2, SOLVABLE


def test_smallest_nonabelian():
    pa = parse("(0,21)")
    assert pa.dim == 2
    assert pa.bind({}).diff[1].terms == {(0, 1): -1}


def test_parametric_entry():
    pa = parse("(0,21,l.31)")
    assert pa.params == ["l"]


def test_zero_power_expansion():
    assert parse("(0^3,12)").dim == 4


def test_index_out_of_range():
    with pytest.raises(NotationError, match="index 3 in a 2-dimensional algebra"):
        parse("(0,31)")


def test_unbalanced_parenthesis():
    with pytest.raises(NotationError):
        parse("(0,21")


def test_bracketed_pairs_for_large_dimension():
    text = "(0^9,[10,1])"
    assert parse(text).dim == 10


def test_print_absorbs_sign():
    assert print_algebra(parse("(0,12)")) == "(0,-21)"
    assert parse(print_algebra(parse("(0,12)"))) == parse("(0,12)")


def test_print_r5():
    assert print_algebra(parse("(0,21+31,31+41,41+51,51)")) == "(0,21+31,31+41,41+51,51)"


def test_corpus_round_trip():
    texts = [e.structure for e in GRADED.values()] + [e.structure for e in SOLVABLE.values()]
    texts.append(PRINTED_D5P_LAMBDA2)
    assert len(texts) > 80
    for t in texts:
        pa = parse(t)
        assert parse(print_algebra(pa)) == pa
        assert print_algebra(parse(print_algebra(pa))) == print_algebra(pa)


def test_json_round_trip_keeps_expression():
    pa = parse("(0,21,(1+l).31)")
    doc = to_json(pa)
    assert "(1+l)" in str(doc) or "1+l" in str(doc)
    assert from_json(doc) == pa


def test_json_numeric_algebra():
    g = parse("(0,0,12)").bind({})
    assert algebra_from_json(to_json(g)) == g
    assert format_algebra(g) == "(0^2,-21)"


def test_schema_error_pointer():
    with pytest.raises(SchemaError) as exc:
        from_json({"dim": 0, "diff": [[]]})
    assert exc.value.pointer == "/diff"
    with pytest.raises(SchemaError):
        from_json({"dim": "two", "diff": []})


def test_bind_requires_parameters():
    with pytest.raises(KeyError):
        parse("(0,l.21)").bind({})
    assert parse("(0,l.21)").bind({"l": Fraction(2)}).diff[1].terms == {(0, 1): -2}
