import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rectbilliard.errors import BilliardError, ConsistencyError
from rectbilliard import exact
from rectbilliard.exact import (
    coprime, format_rational, gcd, parse_rational, prime_factors,
    totatives, totient_bruteforce, totient_dft, totient_product,
)


def test_small_totients_by_hand():
    # hand-counted: 12 -> {1,5,7,11}, 30 -> {1,7,11,13,17,19,23,29}
    assert totatives(12) == [1, 5, 7, 11]
    assert totient_product(12) == 4
    assert totient_product(30) == 8
    assert totient_product(36) == 12
    assert totient_product(1) == 1
    assert totient_product(5) == 4


def test_three_methods_agree_to_500():
    for n in range(1, 501):
        a = totient_product(n)
        assert a == totient_dft(n) == totient_bruteforce(n), n


@given(st.integers(1, 2000))
def test_totient_matches_coprime_count(n):
    assert totient_product(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@given(st.integers(1, 300), st.integers(1, 300))
def test_multiplicative_on_coprime_pairs(a, b):
    if math.gcd(a, b) == 1:
        assert totient_product(a * b) == totient_product(a) * totient_product(b)


@pytest.mark.parametrize("fn", [totient_product, totient_dft, totient_bruteforce])
def test_nonpositive_rejected(fn):
    with pytest.raises(BilliardError):
        fn(0)


def test_dft_residual_check(monkeypatch):
    monkeypatch.setattr(exact, "DFT_TOLERANCE", -1.0)
    with pytest.raises(ConsistencyError):
        totient_dft(10)


@given(st.integers(2, 10**6))
def test_prime_factors_multiply_back(n):
    fs = prime_factors(n)
    assert len(set(fs)) == len(fs)
    assert all(n % p == 0 for p in fs)


def test_gcd_and_coprime():
    assert gcd(12, 18) == 6
    assert gcd(0, 5) == 5
    assert coprime(8, 15) and not coprime(6, 9)
    with pytest.raises(BilliardError):
        gcd(-1, 3)


@pytest.mark.parametrize("text,value", [("3/20", F(3, 20)), ("7", F(7)), ("-2/4", F(-1, 2)), (" 1/3 ", F(1, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.3", "1/0", "abc", "", "1//2", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(BilliardError):
        parse_rational(text)


@given(st.fractions())
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@given(st.fractions(), st.fractions(), st.fractions())
def test_fraction_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a
