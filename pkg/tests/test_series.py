from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotangent.lattice import ConeContext, MultiDegree, lambda_slice
from cotangent.series import (
    IntegrityError,
    MultiSeries,
    UniSeries,
    dumps,
    exact_divide_by_height_zero_poly,
    exact_divide_height_zero,
    expand_inverse_one_plus,
    heightize,
    loads,
    uni_rational_eval,
)

ORDER = 6
coeff = st.integers(-20, 20)
unis = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda c: UniSeries.from_list(c))


def multis(d, cut):
    ctx = ConeContext(d)
    degrees = [R for k in range(cut + 1) for R in lambda_slice(ctx, k)]
    return st.dictionaries(st.sampled_from(degrees), coeff, max_size=8).map(lambda c: MultiSeries(ctx, cut, c))


multi3 = multis(3, 3)


@given(unis, unis, unis)
def test_uni_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniSeries(ORDER)


@given(unis)
def test_uni_inverse(a):
    if a[0] == 0:
        with pytest.raises(ValueError):
            a.inverse()
        return
    assert a * a.inverse() == UniSeries(ORDER, {0: 1})


@given(unis, st.integers(0, 3))
def test_shift_round_trip(a, s):
    assert a.shift(s).shift(-s) == a


def test_shift_refuses_lossy_division():
    with pytest.raises(ValueError):
        UniSeries.from_list([1, 2]).shift(-1)


def test_rational_eval_geometric():
    one_minus_t = UniSeries.from_list([1, -1], order=5)
    got = uni_rational_eval(UniSeries(5, {0: 1}), [(one_minus_t, 2)], 5)
    assert got == UniSeries.from_list([1, 2, 3, 4, 5, 6])


def test_integral_and_nonnegative():
    with pytest.raises(IntegrityError) as err:
        UniSeries(2, {1: Fraction(1, 2)}).integral()
    assert err.value.degree == 1
    with pytest.raises(IntegrityError):
        UniSeries(2, {2: -1}).assert_nonnegative()
    assert UniSeries(2, {1: Fraction(4, 2)}).integral()[1] == 2


def test_index_beyond_order():
    with pytest.raises(IndexError):
        UniSeries.from_list([1, 2])[2]


@given(multi3, multi3, multi3)
def test_multi_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * MultiSeries.one(a.ctx, a.height_cut) == a


@given(multi3, multi3)
def test_heightize_is_a_ring_map(a, b):
    assert heightize(a + b) == heightize(a) + heightize(b)
    assert heightize(a * b) == heightize(a) * heightize(b)


def times_binomial(a, shift):
    """a * (x^[shift,0] - 1), computed on coefficients (x^[shift,0] itself is not in Lambda)."""
    out = {}
    for R, c in a.coeffs.items():
        for S, v in ((R + (shift, 0), c), (R, -c)):
            out[S] = out.get(S, 0) + v
    return MultiSeries(a.ctx, a.height_cut, out)


@given(multi3, st.integers(1, 2))
def test_exact_division_round_trip(a, j):
    # keep the shifted support inside Lambda
    a = MultiSeries(a.ctx, a.height_cut, {R: c for R, c in a.coeffs.items() if R.i + 2 * j <= 3 * R.k})
    num = a
    for _ in range(j):
        num = times_binomial(num, 1)
    assert exact_divide_height_zero(num, j) == a
    assert exact_divide_by_height_zero_poly(times_binomial(a, 2), [-1, 0, 1]) == a


def test_exact_division_reports_remainder_degree():
    ctx = ConeContext(3)
    with pytest.raises(IntegrityError) as err:
        exact_divide_height_zero(MultiSeries.monomial(ctx, (2, 1), 2), 1)
    assert err.value.degree == MultiDegree(0, 1)


@given(st.sampled_from([(1, 1), (0, 1), (3, 1), (2, 2)]), st.integers(1, 5))
def test_inverse_one_plus(R, cut):
    ctx = ConeContext(3)
    inv = expand_inverse_one_plus(ctx, R, cut)
    one = MultiSeries.one(ctx, cut)
    assert inv * (one + MultiSeries.monomial(ctx, R, cut)) == one


def test_inverse_one_plus_needs_height():
    with pytest.raises(ValueError):
        expand_inverse_one_plus(ConeContext(3), (1, 0), 3)


def test_multi_rejects_outside_lambda_and_mixed_contexts():
    with pytest.raises(ValueError):
        MultiSeries(ConeContext(3), 2, {MultiDegree(4, 1): 1})
    with pytest.raises(ValueError):
        MultiSeries.one(ConeContext(3), 1) + MultiSeries.one(ConeContext(4), 1)


@given(multi3)
def test_json_round_trip_multi(a):
    text = dumps(a)
    assert loads(text) == a
    assert dumps(loads(text)) == text


@given(unis)
def test_json_round_trip_uni(a):
    assert loads(dumps(a, 4)) == a


def test_json_is_canonical():
    s = UniSeries.from_list([0, 4, 3])
    assert dumps(s, 4) == '{"cut":2,"d":4,"kind":"uni","terms":[{"c":4,"deg":1},{"c":3,"deg":2}]}'
