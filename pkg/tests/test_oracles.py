import random

import pytest

from twosq import (
    BRUTE_FORCE_BOUND,
    ResourceBoundError,
    brute_force_two_squares,
    cornacchia,
    cross_validate,
    find_witness_euler,
    is_prime,
    make_prime_1mod4,
    two_squares,
)


@pytest.mark.parametrize(
    "n, reps",
    [
        (13, ((2, 3),)),
        (50, ((1, 7), (5, 5))),
        (3, ()),
        (0, ()),
        (25, ((3, 4),)),
        (325, ((1, 18), (6, 17), (10, 15))),
    ],
)
def test_brute_force_examples(n, reps):
    assert brute_force_two_squares(n).reps == reps


def test_brute_force_refuses_above_bound():
    with pytest.raises(ResourceBoundError):
        brute_force_two_squares(BRUTE_FORCE_BOUND + 1)


def test_brute_force_matches_naive_enumeration():
    # enumerate every (a, b) pair up to the limit once, then compare per n
    limit = 10**4
    by_n = {}
    for a in range(1, 101):
        for b in range(a, 101):
            s = a * a + b * b
            if s <= limit:
                by_n.setdefault(s, []).append((a, b))
    for n in range(limit + 1):
        expected = tuple(sorted(by_n.get(n, [])))
        assert brute_force_two_squares(n).reps == expected, n


@pytest.mark.parametrize("n, u, pair", [(13, 5, (2, 3)), (29, 12, (2, 5)), (5, 2, (1, 2))])
def test_cornacchia_examples(n, u, pair):
    d = cornacchia(make_prime_1mod4(n), u)
    assert (d.a, d.b) == pair


def test_cornacchia_accepts_witness_object():
    p = make_prime_1mod4(29)
    d = cornacchia(p, find_witness_euler(p))
    assert (d.a, d.b) == (2, 5)


def test_cornacchia_on_random_large_primes():
    rng = random.Random(4)
    found = 0
    while found < 25:
        bits = rng.randrange(40, 63)
        c = rng.getrandbits(bits) | (1 << (bits - 1))
        c -= (c - 1) % 4
        if c < (1 << (bits - 1)) or not is_prime(c):
            continue
        p = make_prime_1mod4(c)
        d = cornacchia(p, find_witness_euler(p))
        assert d.a * d.a + d.b * d.b == c
        found += 1


@pytest.mark.parametrize("n, pair", [(13, (2, 3)), (29, (2, 5)), (5, (1, 2))])
def test_cross_validate_examples(n, pair):
    report = cross_validate(make_prime_1mod4(n))
    assert (report.a, report.b) == pair
    assert report.minimum_pair == report.cornacchia_pair == pair
    assert report.brute_force_reps == (pair,)


def test_cross_validate_sample_range():
    for n in range(5, 3000, 4):
        if is_prime(n):
            report = cross_validate(make_prime_1mod4(n))
            assert report.brute_force_reps == ((report.a, report.b),)


def test_cross_validate_skips_brute_force_above_bound():
    # first prime = 1 (mod 4) above the brute-force bound
    n = 10**12 + 61
    assert is_prime(n) and n % 4 == 1
    report = cross_validate(make_prime_1mod4(n))
    assert report.brute_force_reps is None
    assert report.minimum_pair == report.cornacchia_pair
    d = two_squares(make_prime_1mod4(n))
    assert (d.a, d.b) == report.minimum_pair
