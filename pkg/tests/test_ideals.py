"""Ideal arithmetic, enumeration, and the elementwise predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.errors import ProperIdealError, RingMismatchError
from ringlab.ideals import (
    all_ideals,
    colon,
    generator_list,
    ideal_colon,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_ideal_mask,
    is_maximal,
    is_prime,
    is_prime_element,
    is_primary,
    is_principal,
    is_radical_ideal,
    principal_generator,
    radical,
    scale,
    span,
)
from ringlab.rings import make_galois_field, make_zn


def members(I):
    return sorted(I.members)


def test_span_in_z12(z12):
    assert members(span(z12, [4])) == [0, 4, 8]
    assert members(span(z12, [6])) == [0, 6]
    assert members(span(z12, [4, 6])) == [0, 2, 4, 6, 8, 10]
    assert members(span(z12, [])) == [0]
    assert members(span(z12, [5])) == list(range(12))


def test_all_ideals_z12(z12):
    # ideals of Z12 = divisors of 12
    lattice = all_ideals(z12)
    assert len(lattice) == 6
    gens = sorted(min(I.members - {0}) if I.num_elements > 1 else 0 for I in lattice)
    assert gens == [0, 1, 2, 3, 4, 6]
    # canonical order: by size then mask
    sizes = [I.num_elements for I in lattice]
    assert sizes == sorted(sizes)


def test_all_ideals_counts(z36, f4):
    assert len(all_ideals(z36)) == 9  # divisors of 36
    assert len(all_ideals(f4)) == 2
    assert len(all_ideals(make_galois_field(2, 3))) == 2
    assert len(all_ideals(make_zn(16))) == 5


def test_ideal_order_and_containment(z12):
    I4 = span(z12, [4])
    I2 = span(z12, [2])
    assert I4 < I2
    assert I4 <= I2
    assert not I2 <= I4
    assert 4 in I4
    assert 2 not in I4


def test_ring_mismatch_rejected(z12, z8):
    I = span(z12, [4])
    J = span(z8, [4])
    with pytest.raises(RingMismatchError):
        _ = I <= J


def test_sum_product_intersection(z12):
    I4 = span(z12, [4])
    I6 = span(z12, [6])
    assert members(ideal_sum(I4, I6)) == [0, 2, 4, 6, 8, 10]
    assert members(ideal_product(I4, I6)) == [0]
    assert members(ideal_intersection(I4, I6)) == [0]
    I2 = span(z12, [2])
    I3 = span(z12, [3])
    assert members(ideal_product(I2, I3)) == [0, 6]
    assert members(ideal_intersection(I2, I3)) == [0, 6]
    # operator sugar agrees
    assert (I2 + I3).mask == ideal_sum(I2, I3).mask
    assert (I2 * I3).mask == ideal_product(I2, I3).mask
    assert (I2 & I3).mask == ideal_intersection(I2, I3).mask


def test_colon_values(z12):
    I6 = span(z12, [6])
    assert members(colon(I6, 2)) == [0, 3, 6, 9]
    assert members(colon(I6, 3)) == [0, 2, 4, 6, 8, 10]
    assert members(colon(I6, 5)) == [0, 6]
    I4 = span(z12, [4])
    assert members(ideal_colon(I4, span(z12, [2]))) == [0, 2, 4, 6, 8, 10]


def test_radical_values(z12, z36):
    assert members(radical(span(z12, [4]))) == [0, 2, 4, 6, 8, 10]
    assert members(radical(span(z12, [6]))) == [0, 6]
    assert members(radical(span(z36, [4]))) == sorted(range(0, 36, 2))
    assert members(radical(span(z36, [12]))) == sorted(range(0, 36, 6))
    # radical of the unit ideal is the unit ideal
    assert radical(span(z12, [1])).num_elements == 12


def test_scale(z12):
    I = span(z12, [2])
    assert members(scale(3, I)) == [0, 6]
    assert members(scale(0, I)) == [0]
    assert members(scale(5, I)) == members(I)


def test_principal_detection(z12):
    I = span(z12, [4])
    assert is_principal(I)
    assert principal_generator(I) == 4
    assert generator_list(I) == (4,)
    # every ideal of Zn is principal
    for J in all_ideals(z12):
        assert is_principal(J)


def test_nonprincipal_ideal_exists():
    # idealizing Z2 by a rank-2 module gives a maximal ideal needing 2 generators
    from ringlab.constructions import make_trivial_extension, module_product, regular_module

    A = make_zn(2)
    E = module_product(regular_module(A), regular_module(A))
    T = make_trivial_extension(A, E)
    target = None
    for I in all_ideals(T):
        if not is_principal(I):
            target = I
            break
    assert target is not None
    assert len(generator_list(target)) >= 2
    assert span(T, generator_list(target)).mask == target.mask


def test_is_ideal_mask(z12):
    for I in all_ideals(z12):
        assert is_ideal_mask(z12, I.mask)
    assert not is_ideal_mask(z12, 0b10)  # {1} misses 0
    assert not is_ideal_mask(z12, 0b11)  # {0,1} not closed under addition


def test_prime_maximal_primary_z12(z12):
    I2 = span(z12, [2])
    I3 = span(z12, [3])
    I4 = span(z12, [4])
    I6 = span(z12, [6])
    I0 = span(z12, [0])
    assert is_prime(I2) and is_maximal(I2)
    assert is_prime(I3) and is_maximal(I3)
    assert not is_prime(I4) and is_primary(I4)
    assert not is_prime(I6) and not is_primary(I6)
    assert not is_primary(I0)
    assert is_radical_ideal(I6)
    assert not is_radical_ideal(I4)


def test_proper_required(z12):
    top = span(z12, [1])
    with pytest.raises(ProperIdealError):
        is_prime(top)


def test_prime_elements(z8, z12):
    # prime elements generate prime ideals
    assert is_prime_element(z8, 2)
    assert not is_prime_element(z8, 4)
    assert not is_prime_element(z8, 1)  # units excluded
    assert not is_prime_element(z8, 0)
    assert is_prime_element(z12, 2)
    assert is_prime_element(z12, 3)
    assert not is_prime_element(z12, 6)


def test_field_has_two_ideals(f4):
    lat = all_ideals(f4)
    assert lat[0].is_zero
    assert not lat[0].is_proper or lat[0].num_elements == 1
    assert lat[1].num_elements == 4
    assert is_maximal(lat[0])
    assert is_prime(lat[0])


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=30), st.data())
def test_ideal_ops_against_integer_arithmetic(n, data):
    """In Zn span(a) is the divisor lattice, so ops reduce to gcd and lcm."""
    import math

    R = make_zn(n)
    a = data.draw(st.integers(min_value=0, max_value=n - 1))
    b = data.draw(st.integers(min_value=0, max_value=n - 1))
    I = span(R, [a])
    J = span(R, [b])
    da = math.gcd(a, n)
    db = math.gcd(b, n)
    assert members(ideal_sum(I, J)) == sorted(range(0, n, math.gcd(da, db)))
    lcm = da * db // math.gcd(da, db)
    expect_inter = sorted(range(0, n, math.lcm(da, db) if lcm else n))
    assert members(ideal_intersection(I, J)) == expect_inter
    prod_gen = math.gcd(da * db, n)
    assert members(ideal_product(I, J)) == sorted(range(0, n, prod_gen))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=24), st.data())
def test_colon_definition(n, data):
    R = make_zn(n)
    a = data.draw(st.integers(min_value=0, max_value=n - 1))
    d = data.draw(st.integers(min_value=0, max_value=n - 1))
    I = span(R, [a])
    C = colon(I, d)
    expect = {x for x in range(n) if R.mul(d, x) in I}
    assert set(C.members) == expect


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=24), st.integers(min_value=0, max_value=23))
def test_radical_definition(n, a):
    R = make_zn(n)
    I = span(R, [a % n])
    right = radical(I)
    expect = set()
    for x in range(n):
        y = x
        for _ in range(n):
            if y in I:
                expect.add(x)
                break
            y = R.mul(y, x)
    assert set(right.members) == expect
