"""Square roots of -1 modulo p, produced two independent ways.

For a prime p = 1 (mod 4) the residues {2, ..., p-2} split into (p-3)/2
unordered inverse pairs {u, v} with u*v = 1 (mod p); exactly one of those
pairs has v = p - u, and its members square to -1.  `inverse_pairing`
materializes that partition (desk scale only: it stores O(p) residues),
while `find_witness_euler` reaches the same root at any scale through
Euler's criterion: the first quadratic nonresidue n gives
u = n**((p-1)/4) mod p.

Both finders canonicalize to the root below p/2, so their outputs are
directly comparable.
"""

from dataclasses import dataclass

from .arith import PrimeOneMod4, mod_mul, mod_pow
from .errors import InvariantError, ResourceBoundError, ValidationError

# The pairing stores O(p) residues; refuse above this (configurable per call).
PAIRING_BOUND = 10**6


@dataclass(frozen=True)
class SqrtM1Witness:
    """A verified u with u*u = -1 (mod p), canonicalized to 1 < u < p/2."""

    p: PrimeOneMod4
    u: int

    def __post_init__(self) -> None:
        pp = self.p.p
        if not (1 < self.u and 2 * self.u < pp):
            raise ValidationError(f"witness {self.u} is not canonical for p={pp}")
        if mod_mul(self.u, self.u, pp) != pp - 1:
            raise ValidationError(f"{self.u}^2 != -1 (mod {pp})")

    @property
    def other(self) -> int:
        """The companion root p - u."""
        return self.p.p - self.u


@dataclass(frozen=True)
class InversePairing:
    """Partition of {2, ..., p-2} into pairs (u, v), u < v, with u*v = 1 (mod p).

    Pairs are sorted by their smaller member.  The pair count (p-3)/2 is odd,
    and exactly one pair (at fixed_pair_index) has v = p - u.
    """

    p: PrimeOneMod4
    pairs: tuple[tuple[int, int], ...]
    fixed_pair_index: int

    @property
    def fixed_pair(self) -> tuple[int, int]:
        return self.pairs[self.fixed_pair_index]


def root_value(p: PrimeOneMod4, u) -> int:
    """Accept a SqrtM1Witness or a bare integer root; return the validated int.

    Either root of -1 mod p (u or p - u) is admitted, which is what lets the
    downstream pipeline be exercised with the non-canonical root.
    """
    uu = u.u if isinstance(u, SqrtM1Witness) else int(u)
    pp = p.p
    if not (1 < uu < pp - 1) or mod_mul(uu, uu, pp) != pp - 1:
        raise ValidationError(f"{uu} is not a square root of -1 modulo {pp}")
    return uu


def inverse_pairing(p: PrimeOneMod4, *, bound: int | None = None) -> InversePairing:
    """Build the full inverse pairing of {2, ..., p-2}.

    Theta(p) time and space, so it refuses primes above the desk-scale
    bound; use the Euler path for those.
    """
    limit = PAIRING_BOUND if bound is None else bound
    pp = p.p
    if pp > limit:
        raise ResourceBoundError(
            f"p={pp} exceeds the pairing bound {limit}; use the euler path"
        )
    seen = bytearray(pp)
    pairs = []
    fixed = -1
    for a in range(2, pp - 1):
        if seen[a]:
            continue
        b = pow(a, -1, pp)
        # a != b always: a*a = 1 (mod p) only for 1 and p-1, both excluded.
        seen[a] = seen[b] = 1
        if a + b == pp:
            fixed = len(pairs)
        pairs.append((a, b))
    if len(pairs) != (pp - 3) // 2 or fixed < 0:
        raise InvariantError(f"inverse pairing of p={pp} is malformed")
    return InversePairing(p, tuple(pairs), fixed)


def first_nonresidue(p: PrimeOneMod4) -> int:
    """Smallest quadratic nonresidue mod p, by increasing scan from 2.

    Only 2, 3 and odd n are tried: the first nonresidue is always prime,
    because any product of residues is a residue.
    """
    pp = p.p
    e = (pp - 1) // 2
    n = 2
    while mod_pow(n, e, pp) != pp - 1:
        n = 3 if n == 2 else n + 2
    return n


def find_witness_euler(p: PrimeOneMod4) -> SqrtM1Witness:
    """Witness via Euler's criterion; works at any scale within the word bound."""
    pp = p.p
    n = first_nonresidue(p)
    u0 = mod_pow(n, (pp - 1) // 4, pp)
    u = min(u0, pp - u0)
    if mod_mul(u, u, pp) != pp - 1:
        raise InvariantError(f"euler witness {u} failed to square to -1 mod {pp}")
    return SqrtM1Witness(p, u)


def find_witness_pairing(p: PrimeOneMod4, *, bound: int | None = None) -> SqrtM1Witness:
    """Witness read off the fixed pair of the inverse pairing (desk scale)."""
    pairing = inverse_pairing(p, bound=bound)
    u, _ = pairing.fixed_pair  # stored (min, max), so u is already canonical
    return SqrtM1Witness(p, u)
