import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import shape_oracle, trial_factor
from quintic_descent.arith import (
    PowerShape, factorize, gcd, nth_root_floor, power_shape, prime_power, radical, valuation,
)


@pytest.mark.parametrize("a, b, g", [(41, 5, 1), (0, 7, 7), (1444, 3125, 1), (-12, 18, 6)])
def test_gcd_examples(a, b, g):
    assert gcd(a, b) == g


def test_gcd_oracle_for_1444_3125():
    assert trial_factor(1444) == {2: 2, 19: 2}
    assert trial_factor(3125) == {5: 5}


def test_gcd_zero_zero():
    with pytest.raises(ValueError):
        gcd(0, 0)


@pytest.mark.parametrize("q, a, e", [(2, 1444, 2), (5, 3125, 5), (7, 1, 0), (3, -54, 3)])
def test_valuation_examples(q, a, e):
    assert valuation(q, a) == e


@pytest.mark.parametrize("q, a", [(2, 0), (4, 16), (1, 5)])
def test_valuation_errors(q, a):
    with pytest.raises(ValueError):
        valuation(q, a)


@pytest.mark.parametrize("a, r", [(320, 10), (1, 1), (19, 19)])
def test_radical_examples(a, r):
    assert radical(a) == r
    assert r == math.prod(trial_factor(a))


@pytest.mark.parametrize("a", [0, -4])
def test_radical_rejects_nonpositive(a):
    with pytest.raises(ValueError):
        radical(a)


@pytest.mark.parametrize("a, n, expected", [(3125, 5, (5, True)), (3124, 5, (4, False)), (1, 9, (1, True))])
def test_nth_root_examples(a, n, expected):
    assert nth_root_floor(a, n) == expected


def test_nth_root_even_of_negative():
    with pytest.raises(ValueError):
        nth_root_floor(-8, 2)


def test_nth_root_large():
    a = 3**4001 + 17
    r, exact = nth_root_floor(a, 7)
    assert r**7 <= a < (r + 1) ** 7 and not exact


@pytest.mark.parametrize("y2, shape", [
    (1444, PowerShape(1, 0, 1, 19)),
    (100, PowerShape(1, 1, 0, None)),
    (12, None),
    (4, PowerShape(1, 0, 0, None)),
    (4 * 5**4, PowerShape(1, 2, 0, None)),
    (4 * 3**6, PowerShape(1, 0, 3, 3)),
    (16 * 9 * 49, None),     # two odd primes
    (25 * 49, None),         # alpha = 0
    (8 * 49, None),          # odd power of 2
])
def test_power_shape_examples(y2, shape):
    assert power_shape(y2) == shape


def test_power_shape_large_prime():
    p = 1_000_003
    assert power_shape(4 * p**4) == PowerShape(1, 0, 2, p)
    assert power_shape(4 * p**2 * 1_000_033**2) is None


def test_power_shape_rejects_nonpositive():
    with pytest.raises(ValueError):
        power_shape(0)


def test_prime_power():
    assert prime_power(3**5) == (3, 5)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_power_shape_value_invariants():
    with pytest.raises(ValueError):
        PowerShape(0, 0, 0, None)
    with pytest.raises(ValueError):
        PowerShape(1, 0, 1, 5)
    with pytest.raises(ValueError):
        PowerShape(1, 0, 0, 3)


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))
def test_gcd_divides_and_is_greatest(a, b):
    if a == 0 and b == 0:
        return
    g = gcd(a, b)
    assert g > 0 and a % g == 0 and b % g == 0
    assert math.gcd(a // g, b // g) == 1


@given(st.integers(1, 10**7))
def test_radical_properties(a):
    r = radical(a)
    assert a % r == 0
    assert all(e == 1 for e in factorize(r).values())
    assert radical(r) == r


@given(st.integers(1, 10**9), st.sampled_from([2, 3, 5, 7, 11, 19, 101]))
def test_valuation_exact(a, q):
    e = valuation(q, a)
    assert a % q**e == 0 and a % q ** (e + 1) != 0


@given(st.integers(0, 10**60), st.integers(1, 12))
def test_nth_root_bracket(a, n):
    r, exact = nth_root_floor(a, n)
    assert r**n <= a < (r + 1) ** n
    assert exact == (r**n == a)


@settings(max_examples=300)
@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 3),
       st.sampled_from([3, 7, 11, 13, 19, 23, 97, 1009]))
def test_power_shape_round_trip(alpha, beta, gamma, p):
    y2 = 2 ** (2 * alpha) * 5 ** (2 * beta) * p ** (2 * gamma)
    s = power_shape(y2)
    assert s is not None and s.value() == y2
    assert (s.alpha, s.beta, s.gamma) == (alpha, beta, gamma)


def test_power_shape_matches_factorization_oracle():
    for y2 in range(1, 20_001):
        s = power_shape(y2)
        expected = shape_oracle(y2)
        got = None if s is None else (s.alpha, s.beta, s.gamma, s.p)
        assert got == expected, y2
