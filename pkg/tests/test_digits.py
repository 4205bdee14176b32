"""Residue digit arithmetic and the digit-pattern support sets."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pmlog import (
    Prime,
    Residue,
    ResourceCapError,
    Sign,
    enumerate_R,
    in_S_minus,
    in_S_plus,
    residue_from_integer,
)

PRIMES = [Prime(2), Prime(3), Prime(5)]


def brute_R(p, count, parity):
    """Independent expansion of the digit-sum definition."""
    out = set()
    for digits in itertools.product(range(p), repeat=count):
        out.add(sum(d * p ** (2 * l + parity) for l, d in enumerate(digits)))
    return out


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 97])
def test_prime_accepts_primes(p):
    assert Prime(p) == p


@pytest.mark.parametrize("p", [-3, 0, 1, 4, 6, 9, 15, 100])
def test_prime_rejects_nonprimes(p):
    with pytest.raises(ValueError):
        Prime(p)


def test_residue_from_integer_examples():
    assert residue_from_integer(10, Prime(3), 3).digits == (1, 0, 1)
    assert residue_from_integer(0, Prime(5), 2).digits == (0, 0)
    assert residue_from_integer(-1, Prime(2), 3).digits == (1, 1, 1)


def test_residue_silent_reduction():
    p = Prime(3)
    assert residue_from_integer(27 + 5, p, 3).value == 5
    assert residue_from_integer(-4, p, 2).value == 5


def test_residue_validation():
    p = Prime(3)
    with pytest.raises(ValueError):
        residue_from_integer(0, p, 0)
    with pytest.raises(ValueError):
        Residue(p=p, n=2, digits=(1,))
    with pytest.raises(ValueError):
        Residue(p=p, n=2, digits=(3, 0))
    with pytest.raises(ValueError):
        Residue(p=p, n=2, digits=(-1, 0))


@pytest.mark.parametrize("p", PRIMES)
def test_residue_bijection(p):
    for n in range(1, 5):
        seen = set()
        for a in range(p**n):
            r = residue_from_integer(a, p, n)
            assert r.value == a
            seen.add(r.digits)
        assert len(seen) == p**n


@given(
    a=st.integers(min_value=-(10**12), max_value=10**12),
    p=st.sampled_from([2, 3, 5, 7]),
    n=st.integers(min_value=1, max_value=8),
)
def test_residue_roundtrip_hypothesis(a, p, n):
    r = residue_from_integer(a, Prime(p), n)
    assert r.value == a % p**n
    assert len(r.digits) == n


def test_in_S_plus_examples():
    assert in_S_plus(residue_from_integer(3, Prime(3), 3)) is True
    assert in_S_plus(residue_from_integer(4, Prime(3), 3)) is False
    assert in_S_plus(residue_from_integer(0, Prime(2), 1)) is True


def test_in_S_minus_examples():
    p3 = Prime(3)
    for a in range(3):
        assert in_S_minus(residue_from_integer(a, p3, 1)) is True
    assert in_S_minus(residue_from_integer(5, p3, 2)) is False
    assert in_S_minus(residue_from_integer(5, Prime(2), 4)) is True


@pytest.mark.parametrize("p", PRIMES)
def test_S_membership_matches_R_reduction(p):
    # S(n, +) is exactly the reduction of R(floor(n/2), +) mod p^n, and
    # S(n, -) the reduction of R(floor((n+1)/2), -).
    for n in range(1, 7):
        if p**n > 20000:
            continue
        r_plus = enumerate_R(p, n // 2, Sign.PLUS)
        r_minus = enumerate_R(p, (n + 1) // 2, Sign.MINUS)
        for a in range(p**n):
            r = residue_from_integer(a, p, n)
            assert in_S_plus(r) == any(a % p**n == b % p**n for b in r_plus)
            assert in_S_minus(r) == any(a % p**n == b % p**n for b in r_minus)


@pytest.mark.parametrize("p", PRIMES)
def test_S_cardinalities(p):
    for n in range(1, 6):
        if p**n > 20000:
            continue
        plus = sum(1 for a in range(p**n) if in_S_plus(residue_from_integer(a, p, n)))
        minus = sum(1 for a in range(p**n) if in_S_minus(residue_from_integer(a, p, n)))
        assert plus == p ** (n // 2)  # one free digit per odd position below n
        assert minus == p ** ((n + 1) // 2)


def test_enumerate_R_examples():
    assert enumerate_R(Prime(2), 1, Sign.PLUS) == {0, 2}
    assert enumerate_R(Prime(3), 2, Sign.MINUS) == {0, 1, 2, 9, 10, 11, 18, 19, 20}
    assert enumerate_R(Prime(5), 0, Sign.PLUS) == {0}


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("count", [0, 1, 2, 3])
def test_enumerate_R_matches_definition(p, count):
    assert enumerate_R(p, count, Sign.PLUS) == brute_R(p, count, 1)
    assert enumerate_R(p, count, Sign.MINUS) == brute_R(p, count, 0)
    assert len(enumerate_R(p, count, Sign.PLUS)) == p**count


def test_enumerate_R_cap():
    with pytest.raises(ResourceCapError):
        enumerate_R(Prime(2), 21, Sign.PLUS)


def test_enumerate_R_rejects_negative_count():
    with pytest.raises(ValueError):
        enumerate_R(Prime(2), -1, Sign.PLUS)
