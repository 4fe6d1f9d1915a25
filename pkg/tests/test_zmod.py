import math

import pytest
from hypothesis import given, strategies as st

from gbsdetect.errors import DomainError
from gbsdetect.zmod import gcd_d, inverse_mod, is_prime, sigma_divisors, solve_congruence


@pytest.mark.parametrize("d, m, expected", [(4, 2, 2), (6, 0, 6), (8, 6, 2), (7, 3, 1)])
def test_gcd_d(d, m, expected):
    assert gcd_d(d, m) == expected


@pytest.mark.parametrize("d, divs, sigma", [
    (4, [1, 2, 4], 7),
    (6, [1, 2, 3, 6], 12),
    (5, [1, 5], 6),
    (8, [1, 2, 4, 8], 15),
    (12, [1, 2, 3, 4, 6, 12], 28),
])
def test_sigma_divisors(d, divs, sigma):
    assert sigma_divisors(d) == (divs, sigma)


def test_sigma_rejects_small_d():
    with pytest.raises(DomainError):
        sigma_divisors(1)


def test_congruence_examples():
    assert solve_congruence(2, 2, 4).solutions() == [1, 3]
    assert not solve_congruence(2, 1, 4).solvable
    assert solve_congruence(2, 1, 4).solutions() == []
    for d in (2, 5, 9):
        for k in range(d):
            assert solve_congruence(1, k, d).solutions() == [k]


def test_congruence_zero_coefficient():
    sol = solve_congruence(0, 0, 6)
    assert sol.class_count == 6 and sol.period == 1
    assert sorted(sol.solutions()) == list(range(6))
    assert not solve_congruence(0, 3, 6).solvable


def test_congruence_exhaustive_up_to_64():
    for d in range(2, 65):
        for a in range(d):
            for b in range(d):
                brute = [x for x in range(d) if (a * x - b) % d == 0]
                sol = solve_congruence(a, b, d)
                assert sorted(sol.solutions()) == brute
                if brute:
                    assert sol.class_count == math.gcd(a, d) == len(brute)
                    assert sol.period * sol.class_count == d


@given(st.integers(2, 500), st.integers(0, 10**6))
def test_inverse_mod(modulus, a):
    if math.gcd(a, modulus) != 1:
        with pytest.raises(DomainError):
            inverse_mod(a, modulus)
    else:
        assert a * inverse_mod(a, modulus) % modulus == 1


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
