"""Independent decomposition routes used to cross-check the main pipeline."""

from dataclasses import dataclass
from math import isqrt

from .arith import PrimeOneMod4
from .errors import InvariantError, ResourceBoundError, ValidationError
from .squares import Decomposition, two_squares
from .witness import find_witness_euler, root_value

# brute_force_two_squares loops to sqrt(n/2); refuse anything slower.
BRUTE_FORCE_BOUND = 10**12


@dataclass(frozen=True)
class RepresentationSet:
    """Every (a, b) with 0 < a <= b and a^2 + b^2 = n, sorted by a."""

    n: int
    reps: tuple[tuple[int, int], ...]


def brute_force_two_squares(n: int) -> RepresentationSet:
    """Ground-truth enumeration of all two-square representations of n."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    if n > BRUTE_FORCE_BOUND:
        raise ResourceBoundError(f"n={n} exceeds the brute-force bound {BRUTE_FORCE_BOUND}")
    reps = []
    for a in range(1, isqrt(n // 2) + 1):
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest:
            reps.append((a, b))  # a <= sqrt(n/2) forces b >= a
    return RepresentationSet(n, tuple(reps))


def cornacchia(p: PrimeOneMod4, u) -> Decomposition:
    """Euclidean remainder descent from the larger root of -1 mod p.

    Starting the remainder sequence at the root in (p/2, p), the first
    remainder at or below floor_sqrt(p) is one leg of the decomposition;
    the other is recovered as an exact square root and verified.
    """
    uu = root_value(p, u)
    pp, r = p.p, p.r
    prev, cur = pp, max(uu, pp - uu)
    while cur > r:
        prev, cur = cur, prev % cur
    a = cur
    rest = pp - a * a
    b = isqrt(rest)
    if b * b != rest:
        raise InvariantError(f"descent for p={pp} left a={a} with p - a^2 not a perfect square")
    lo, hi = (a, b) if a < b else (b, a)
    return Decomposition(p, lo, hi)


@dataclass(frozen=True)
class AgreementReport:
    """All routes agreed on one normalized pair (a, b) for p."""

    p: int
    a: int
    b: int
    minimum_pair: tuple[int, int]
    cornacchia_pair: tuple[int, int]
    brute_force_reps: tuple[tuple[int, int], ...] | None  # None above the brute bound


def cross_validate(p: PrimeOneMod4) -> AgreementReport:
    """Run every available decomposition route on p and demand agreement.

    The streaming construction and Cornacchia always run; the brute-force
    enumeration joins below its bound and must contain exactly one entry.
    Any disagreement raises with the full inputs.
    """
    w = find_witness_euler(p)
    d = two_squares(p)
    c = cornacchia(p, w)
    pair_d = (d.a, d.b)
    pair_c = (c.a, c.b)
    reps = brute_force_two_squares(p.p).reps if p.p <= BRUTE_FORCE_BOUND else None
    ok = pair_d == pair_c and (reps is None or reps == (pair_d,))
    if not ok:
        raise InvariantError(
            f"decomposition disagreement for p={p.p} (u={w.u}): "
            f"minimum={pair_d} cornacchia={pair_c} brute_force={reps}"
        )
    return AgreementReport(p.p, d.a, d.b, pair_d, pair_c, reps)
