import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vogelqdim.sinhprod import (
    SinhProduct,
    SinhSum,
    TermClass,
    Unbalanced,
    classify,
    dimension_limit,
    eval_numeric,
    make_term,
    product,
)

pos = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6).filter(lambda q: q > 0)
args = st.lists(pos, max_size=5)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(lambda q: q != 0)


@st.composite
def products(draw, balanced=False):
    num = draw(args)
    den = draw(st.lists(pos, min_size=len(num), max_size=len(num)) if balanced else args)
    return SinhProduct.from_args(draw(coeffs), num, den)


def direct(p: SinhProduct, x: float) -> float:
    v = float(p.coeff)
    for a, m in p.num:
        v *= math.sinh(x * float(a)) ** m
    for a, m in p.den:
        v /= math.sinh(x * float(a)) ** m
    return v


@pytest.mark.parametrize(
    "num,den,cls",
    [([1, 2], [3], TermClass.REGULAR), ([0, 2], [3], TermClass.ZERO),
     ([1], [0], TermClass.SINGULAR), ([0], [0, 1], TermClass.INDETERMINATE)],
)
def test_classify(num, den, cls):
    assert classify(num, den) is cls
    got, val = make_term(1, num, den)
    assert got is cls
    assert (val is None) == (cls in (TermClass.SINGULAR, TermClass.INDETERMINATE))


def test_make_term_flips_signs_and_cancels():
    _, p = make_term(3, [Fraction(-1, 2), 2, 5], [5, Fraction(1, 3)])
    assert p.coeff == -3
    assert p.num_list() == [Fraction(1, 2), 2]
    assert p.den_list() == [Fraction(1, 3)]


def test_zero_coefficient_is_zero():
    cls, p = make_term(0, [1], [2])
    assert p.is_zero and cls is TermClass.REGULAR


def test_dimension_limit():
    p = SinhProduct.from_args(1, [Fraction(3, 2), 5], [Fraction(1, 2), 1])
    assert dimension_limit(p) == 15
    with pytest.raises(Unbalanced):
        dimension_limit(SinhProduct.from_args(1, [1, 2], [1]))


def test_str_and_json():
    p = SinhProduct.from_args(Fraction(-2, 3), [Fraction(7, 2), 1], [Fraction(1, 2)])
    d = p.to_json()
    assert d == {"coeff": "-2/3", "num": ["1", "7/2"], "den": ["1/2"]}
    assert SinhProduct.from_json(json.loads(json.dumps(d))) == p
    assert "sinh[x:" in str(p)


@given(products())
def test_json_round_trip(p):
    assert SinhProduct.from_json(p.to_json()) == p


@given(products(), products())
def test_multiplication_matches_floats(a, b):
    for x in (0.1, 0.37):
        want = direct(a, x) * direct(b, x)
        assert math.isclose(eval_numeric(a * b, x), want, rel_tol=1e-9)


@given(products())
def test_inverse(p):
    assert p * p.inverse() == SinhProduct.constant(1)
    assert (p / p) == SinhProduct.constant(1)


@given(products(balanced=True), st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4))
def test_rescale_preserves_dimension(p, s):
    assert dimension_limit(p.rescale_args(s)) == dimension_limit(p)


@given(products(), products())
def test_sum_equality_is_reflexive_and_detects_difference(a, b):
    assert SinhSum([a, b]) == SinhSum([b, a])
    assert not (SinhSum([a]) - a).terms
    if a != b:
        assert SinhSum([a]) != SinhSum([b])


def test_sum_equality_uses_hyperbolic_identities():
    # sinh(3x)/sinh(x) = 4 cosh(x)^2 - 1 = sinh(2x)^2 / sinh(x)^2 - 1
    lhs = SinhSum([SinhProduct.from_args(1, [3], [1])])
    rhs = SinhSum([SinhProduct.from_args(1, [2, 2], [1, 1]), SinhProduct.constant(-1)])
    assert lhs == rhs
    assert lhs != rhs + SinhProduct.constant(1)
    assert math.isclose(lhs(0.37), rhs(0.37), rel_tol=1e-12)


def test_sum_merges_identical_shapes():
    p = SinhProduct.from_args(2, [3], [1])
    s = SinhSum([p, p.scale(-1), p])
    assert s.single() == p
    assert s.dimension() == 6


def test_eval_numeric_large_arguments():
    p = SinhProduct.from_args(1, [400], [399])
    assert math.isclose(eval_numeric(p, 1.0), math.e, rel_tol=1e-12)


def test_product_helper():
    fs = [SinhProduct.from_args(1, [2], [1]), SinhProduct.from_args(1, [1], [2])]
    assert product(fs) == SinhProduct.constant(1)
