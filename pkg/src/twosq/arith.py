"""Exact integer and modular arithmetic kernels.

Everything here is a pure function over Python integers, so intermediate
products are exact at any size.  Interfaces still follow a 64-bit word
contract (primes and moduli below 2**64): that is the range on which the
primality test is deterministic and on which all other modules operate.
"""

import math
from dataclasses import dataclass

from .errors import ValidationError

WORD_BOUND = 1 << 64

# Strong bases making Miller-Rabin deterministic for every n < 2**64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Below this, plain trial division is used instead of Miller-Rabin.
_TRIAL_LIMIT = 1 << 16


def least_residue(n: int, m: int) -> int:
    """Least nonnegative residue of n modulo m; correct for negative n."""
    if m < 1:
        raise ValidationError(f"modulus must be >= 1, got {m}")
    return n % m


def floor_sqrt(n: int) -> int:
    """Largest r with r*r <= n, computed in exact integer arithmetic."""
    if n < 0:
        raise ValidationError(f"floor_sqrt requires n >= 0, got {n}")
    return math.isqrt(n)


def mod_mul(a: int, b: int, m: int) -> int:
    """(a * b) % m; the product is exact because Python ints never overflow."""
    if m < 1:
        raise ValidationError(f"modulus must be >= 1, got {m}")
    return a * b % m


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp % m by binary square-and-multiply over mod_mul."""
    if m < 1:
        raise ValidationError(f"modulus must be >= 1, got {m}")
    if exp < 0:
        raise ValidationError(f"exponent must be >= 0, got {exp}")
    result = 1 % m
    b = base % m
    e = exp
    while e:
        if e & 1:
            result = mod_mul(result, b, m)
        b = mod_mul(b, b, m)
        e >>= 1
    return result


def is_prime(n: int) -> bool:
    """Deterministic primality verdict for 0 <= n < 2**64.

    Small n fall to trial division; larger n use Miller-Rabin with a fixed
    base set that is exact below 2**64.  No randomness anywhere, so runs
    are reproducible.
    """
    if n < 0 or n >= WORD_BOUND:
        raise ValidationError(f"is_prime is exact only for 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _TRIAL_LIMIT:
        d = 41
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeOneMod4:
    """A validated prime p with p % 4 == 1, carrying r = floor_sqrt(p)."""

    p: int
    r: int

    def __post_init__(self) -> None:
        if self.p % 4 != 1 or not is_prime(self.p):
            raise ValidationError(f"{self.p} is not a prime congruent to 1 mod 4")
        if not (self.r * self.r <= self.p < (self.r + 1) * (self.r + 1)):
            raise ValidationError(f"r={self.r} is not floor_sqrt({self.p})")


def make_prime_1mod4(n: int) -> PrimeOneMod4:
    """Validate n and wrap it as a PrimeOneMod4.

    Rejections are distinct: non-primes, the prime 2, and primes congruent
    to 3 mod 4 each get their own message (the latter two never have the
    decomposition this package computes).
    """
    if not is_prime(n):
        if n >= 2:
            raise ValidationError(f"{n} is composite")
        raise ValidationError(f"{n} is not prime")
    if n == 2:
        raise ValidationError("2 is prime but 2 % 4 != 1: not in this theorem's range")
    if n % 4 == 3:
        raise ValidationError(f"{n} ≡ 3 (mod 4): no representation exists")
    return PrimeOneMod4(n, floor_sqrt(n))
