"""Spec-string parsers for rings, expansions, and predicate queries."""

from __future__ import annotations

import pytest

from ringlab.errors import ParseError
from ringlab.expansions import radical_expansion
from ringlab.ideals import span
from ringlab.predicates import DELTA_FREE
from ringlab.rings import make_zn
from ringlab.specparse import Query, parse_expansion, parse_query, parse_ring


def test_parse_zn():
    R = parse_ring("Z12")
    assert R.order == 12
    assert R.label == "Z12"


def test_parse_poly_quotient():
    R = parse_ring("Z2[x]/(x^2)")
    assert R.order == 4
    assert R.label == "Z2[x]/(x^2)"
    F = parse_ring("Z2[x]/(x^2+x+1)")
    assert F.is_field()
    G = parse_ring("Z3[x]/(x^2+1)")
    assert G.order == 9
    assert G.is_field()  # x^2+1 irreducible mod 3


def test_parse_product():
    P = parse_ring("Z4xZ9")
    assert P.order == 36
    assert P.label == "Z4xZ9"
    T = parse_ring("Z2xZ2xZ2")
    assert T.order == 8


def test_parse_quotient_postfix():
    Q = parse_ring("Z12/(4)")
    assert Q.order == 4
    Q2 = parse_ring("Z12/(4,6)")
    assert Q2.order == 2


def test_parse_trivial_extension():
    T = parse_ring("triv(Z4,reg)")
    assert T.order == 16
    T2 = parse_ring("triv(Z4,quot:(2))")
    assert T2.order == 8


def test_parse_localization():
    L = parse_ring("loc(Z12,3)")
    assert L.order == 4
    assert L.label == "loc(Z12,3)"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_ring("Z4x")
    assert exc.value.position == 3
    with pytest.raises(ParseError):
        parse_ring("Z1")
    with pytest.raises(ParseError):
        parse_ring("Q4")
    with pytest.raises(ParseError):
        parse_ring("Z4)")
    with pytest.raises(ParseError):
        parse_ring("Z6[x]/(x^2)")  # composite coefficient modulus
    with pytest.raises(ParseError):
        parse_ring("")


def test_ring_labels_roundtrip(catalog12):
    for entry in catalog12:
        R = entry.ring
        S = parse_ring(R.label)
        assert S.order == R.order
        assert S.add_table == R.add_table
        assert S.mul_table == R.mul_table
        assert S.element_names == R.element_names


def test_parse_expansion_standard(z12):
    assert parse_expansion("id", z12).label == "id"
    assert parse_expansion("rad", z12).label == "rad"
    assert parse_expansion("full", z12).label == "full"
    d = parse_expansion("plus:(4)", z12)
    assert d(span(z12, [6])).mask == span(z12, [2]).mask


def test_expansion_labels_roundtrip(catalog8):
    for entry in catalog8:
        for d in entry.expansions:
            again = parse_expansion(d.label, entry.ring)
            assert again.table == d.table, (entry.provenance, d.label)


def test_parse_expansion_requires_matching_construction(z12):
    with pytest.raises(ParseError):
        parse_expansion("prod(id,id)", z12)  # not a product ring
    with pytest.raises(ParseError):
        parse_expansion("bar(rad,(4))", z12)  # not a quotient ring
    with pytest.raises(ParseError):
        parse_expansion("nonsense", z12)


def test_parse_query_evaluation():
    q = parse_query("1abs-delta-primary & !delta-primary")
    assert isinstance(q, Query)
    assert q.uses_delta
    z8 = make_zn(8)
    d = radical_expansion(z8)
    I = span(z8, [2])
    got = q.evaluate(I, d)
    from ringlab.predicates import is_delta_primary, is_one_absorbing_delta_primary

    expect = is_one_absorbing_delta_primary(I, d) and not is_delta_primary(I, d)
    assert got == expect


def test_parse_query_operators():
    q_or = parse_query("prime | maximal")
    q_and = parse_query("prime & maximal")
    q_not = parse_query("!prime")
    q_paren = parse_query("!(prime | maximal) & 2abs")
    z12 = make_zn(12)
    for I in z12.proper_ideals():
        from ringlab.predicates import evaluate_predicate

        p = evaluate_predicate("prime", I, None)
        m = evaluate_predicate("maximal", I, None)
        t = evaluate_predicate("2abs", I, None)
        assert q_or.evaluate(I) == (p or m)
        assert q_and.evaluate(I) == (p and m)
        assert q_not.evaluate(I) == (not p)
        assert q_paren.evaluate(I) == ((not (p or m)) and t)


def test_query_delta_free_flag():
    assert not parse_query("prime & !maximal").uses_delta
    assert parse_query("prime & delta-semiprimary").uses_delta
    assert parse_query("2abs").names <= DELTA_FREE | {"2abs"}


def test_query_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_query("bogus & prime")
    assert exc.value.position == 0
    with pytest.raises(ParseError):
        parse_query("prime &")
    with pytest.raises(ParseError):
        parse_query("(prime")
    with pytest.raises(ParseError):
        parse_query("")
    with pytest.raises(ParseError):
        parse_query("prime prime")


def test_query_whitespace_tolerant():
    a = parse_query("prime&!maximal")
    b = parse_query("  prime  &  !  maximal ")
    z12 = make_zn(12)
    for I in z12.proper_ideals():
        assert a.evaluate(I) == b.evaluate(I)
