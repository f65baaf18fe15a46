import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasichar.arrangement import Arrangement
from quasichar.errors import IntegrityError, ResourceError
from quasichar.intmat import IntMatrix
from quasichar.quasipoly import (
    IntPolynomial,
    QuasiPolynomial,
    characteristic_quasipolynomial,
    combine,
    constituent_via_interpolation,
    constituent_via_subsets,
    degree_defect,
    format_poly,
    minimum_period,
    poly_from_roots,
    reduce_to_minimum_period,
)

from oracles import count_complement_slow


def test_polynomial_basics():
    p = IntPolynomial.from_coeffs([1, 2, 3, 0, 0])
    assert p.coeffs == (1, 2, 3)
    assert p.degree == 2
    assert p(2) == 1 + 4 + 12
    assert p.coeff(5) == 0
    assert (p + p).coeffs == (2, 4, 6)
    assert (p - p).is_zero()
    q = IntPolynomial((0, 1))  # t
    assert (p * q).coeffs == (0, 1, 2, 3)
    assert p.scale(2).coeffs == (2, 4, 6)


def test_polynomial_shift_argument():
    # p(t) = t^2; p(t - 1) = t^2 - 2t + 1
    p = IntPolynomial((0, 0, 1))
    assert p.shift_argument(-1).coeffs == (1, -2, 1)
    assert p.shift_argument(1).coeffs == (1, 2, 1)
    assert p.shift_argument(0) == p


def test_poly_from_roots():
    p = poly_from_roots([1, 3])
    assert p.coeffs == (3, -4, 1)  # (t-1)(t-3)
    assert poly_from_roots([]).coeffs == (1,)


def test_format_poly():
    assert format_poly(IntPolynomial((3, -4, 1))) == "q^2 - 4q + 3"
    assert format_poly(IntPolynomial((0, -1))) == "-q"
    assert format_poly(IntPolynomial.zero()) == "0"
    assert format_poly(IntPolynomial((-24, 26, -9, 1))) == \
        "q^3 - 9q^2 + 26q - 24"


coeff_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=6)


@settings(max_examples=100, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_polynomial_ring_laws(a, b, x):
    p, q = IntPolynomial.from_coeffs(a), IntPolynomial.from_coeffs(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


def b2_arrangement():
    return Arrangement(IntMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]]))


def test_b2_quasipoly():
    chi = characteristic_quasipolynomial(b2_arrangement())
    assert chi.period == 2
    assert chi.constituents[1].coeffs == (3, -4, 1)
    assert chi.constituents[2].coeffs == (4, -4, 1)
    assert chi.evaluate(5) == 8
    assert chi.evaluate(4) == 4
    assert chi.constituent_for(6) == chi.constituents[2]
    assert chi.constituent_for(7) == chi.constituents[1]


def test_quasipoly_matches_brute_force():
    arr = Arrangement(IntMatrix.from_rows([[1, 1, 2], [1, -1, 3]]))
    chi = characteristic_quasipolynomial(arr)
    rows = arr.matrix.to_rows()
    for q in range(1, 13):
        assert chi.evaluate(q) == count_complement_slow(rows, q)


def test_constituent_via_subsets_single():
    arr = b2_arrangement()
    assert constituent_via_subsets(arr, 2).coeffs == (4, -4, 1)


def test_subset_budget():
    with pytest.raises(ResourceError):
        characteristic_quasipolynomial(b2_arrangement(), budget=8)


def test_interpolation_recovers_constituent():
    arr = b2_arrangement()
    chi = characteristic_quasipolynomial(arr)
    rows = arr.matrix.to_rows()
    for d in (1, 2):
        p = constituent_via_interpolation(
            lambda q: count_complement_slow(rows, q), d, 2, 2)
        assert p == chi.constituents[d]


def test_interpolation_detects_wrong_period():
    # pretending the period is 1 mixes even and odd counts: the result
    # cannot be a monic integer polynomial, which must be reported
    arr = b2_arrangement()
    rows = arr.matrix.to_rows()
    with pytest.raises(IntegrityError):
        constituent_via_interpolation(
            lambda q: count_complement_slow(rows, q), 1, 1, 2)


def test_minimum_period_can_be_smaller_than_lcm():
    # a quasi-polynomial that is secretly an honest polynomial
    p = IntPolynomial((0, 1))
    chi = QuasiPolynomial(1, 2, {1: p, 2: p})
    assert minimum_period(chi) == 1
    reduced = reduce_to_minimum_period(chi)
    assert reduced.period == 1
    assert reduced.constituents == {1: p}


def test_combine_and_degree_defect():
    a = IntPolynomial((1, 2, 1))
    b = IntPolynomial((0, 2, 1))
    assert combine([a], [b]).coeffs == (1,)
    assert degree_defect([a], [b]) == 0
    assert degree_defect([a], [a]) == float("-inf")
