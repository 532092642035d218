import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotangent.lattice import (
    ConeContext,
    MultiDegree,
    divisors_of_degree,
    enumerate_K,
    in_interior_lambda,
    in_lambda,
    in_lambda_plus,
    lambda_plus_up_to,
    lambda_slice,
    moebius,
)

ds = st.integers(3, 9)


def mu_by_recursion(n, _cache={1: 1}):
    # sum_{e | n} mu(e) = 0 for n > 1
    if n not in _cache:
        _cache[n] = -sum(mu_by_recursion(e) for e in range(1, n) if n % e == 0)
    return _cache[n]


@pytest.mark.parametrize("n", range(1, 121))
def test_moebius_matches_recursive_definition(n):
    assert moebius(n) == mu_by_recursion(n)


def test_moebius_rejects_nonpositive():
    with pytest.raises(ValueError):
        moebius(0)


def test_context_validation():
    with pytest.raises(ValueError):
        ConeContext(2)
    assert ConeContext(5).m == 4


@given(ds, st.integers(-5, 30), st.integers(-2, 5))
def test_membership_is_ray_positivity(d, i, k):
    ctx = ConeContext(d)
    assert in_lambda(ctx, (i, k)) == (i >= 0 and d * k - i >= 0)
    assert in_interior_lambda(ctx, (i, k)) == (i > 0 and d * k - i > 0)
    if in_interior_lambda(ctx, (i, k)):
        assert in_lambda_plus(ctx, (i, k))
    assert not in_lambda_plus(ctx, (0, 0))


@given(ds, st.integers(0, 6))
def test_slice_is_exactly_lambda_at_height(d, k):
    ctx = ConeContext(d)
    sl = lambda_slice(ctx, k)
    assert sl == [MultiDegree(i, k) for i in range(-3, d * k + 4) if in_lambda(ctx, (i, k))]


def test_lambda_plus_counts():
    ctx = ConeContext(4)
    assert len(lambda_plus_up_to(ctx, 3)) == 5 + 9 + 13


@given(st.integers(0, 40), st.integers(0, 40))
def test_divisors(i, k):
    if i == k == 0:
        with pytest.raises(ValueError):
            divisors_of_degree((i, k))
        return
    divs = divisors_of_degree((i, k))
    assert divs[0] == (1, MultiDegree(i, k))
    for c, R in divs:
        assert R.scale(c) == (i, k)


@given(ds, st.integers(0, 20), st.integers(0, 4))
def test_enumerate_K_brute_force(d, R1, R2):
    ctx = ConeContext(d)
    R = MultiDegree(R1, R2)
    expected = sorted(
        (
            MultiDegree(a, b)
            for b in range(-1, R2 + 2)
            for a in range(-2, R1 + 3)
            if in_lambda_plus(ctx, (a, b)) and in_interior_lambda(ctx, R - (a, b))
        ),
        key=lambda r: (r.k, r.i),
    )
    assert enumerate_K(ctx, R) == expected


def test_degree_arithmetic():
    R = MultiDegree(3, 2)
    assert R + (1, 1) == MultiDegree(4, 3)
    assert R - (3, 2) == MultiDegree(0, 0)
    assert R.ht == 2 and str(R) == "[3,2]"
