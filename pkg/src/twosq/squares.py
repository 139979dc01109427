"""The sorted-residue construction: decomposition, certificates, gap descent.

Fix a prime p = 1 (mod 4), a root u of -1 mod p, and R = floor_sqrt(p).
Each x in 1..R maps to y(x) = u*x mod p; sorting the R pairs (x, y) by y
gives the table 0 < y_1 < ... < y_R < p whose every row satisfies
x^2 + y^2 = 0 (mod p).  Three facts make that table an executable proof:

* the first row has y_1 <= R, so x_1^2 + y_1^2 lies strictly between 0 and
  2p and must equal p (existence);
* y_2 > R, so no second row can do the same, and an algebraic parity
  identity rules out any representation not coming from a row
  (uniqueness);
* y_1 <= R itself follows from a pigeonhole over the R+1 telescoping
  differences of 0, y_1, ..., y_R, p: some difference is <= R, and a
  three-way case split (tail wrap / ascending / descending) lands it back
  in the table.  `gap_witness` finds and checks such a difference.

`thue_min` is the same small-residue phenomenon for an arbitrary modulus:
for m >= 2 and gcd(a, m) = 1 some x with 1 <= |x| <= sqrt(m) has
a*x mod m below sqrt(m).
"""

import math
from dataclasses import dataclass
from enum import Enum

from .arith import PrimeOneMod4, mod_mul
from .errors import InvariantError, ResourceBoundError, ValidationError
from .witness import find_witness_euler, root_value

# build_table materializes Theta(sqrt p) rows; refuse above this by default.
TABLE_BOUND = 1 << 40


@dataclass(frozen=True)
class ResidueTable:
    """The R pairs (x_i, y_i) with y_i = u*x_i mod p, sorted by y."""

    p: PrimeOneMod4
    u: int
    rows: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        """Re-check every structural invariant; raises InvariantError."""
        pp, r, u = self.p.p, self.p.r, self.u
        if mod_mul(u, u, pp) != pp - 1:
            raise InvariantError(f"stored root {u} does not square to -1 mod {pp}")
        if len(self.rows) != r:
            raise InvariantError(f"expected {r} rows, found {len(self.rows)}")
        if sorted(x for x, _ in self.rows) != list(range(1, r + 1)):
            raise InvariantError("x values are not exactly 1..R")
        prev_y = 0
        for x, y in self.rows:
            if not prev_y < y < pp:
                raise InvariantError(f"y values not strictly increasing in (0, p) at ({x}, {y})")
            if y != u * x % pp:
                raise InvariantError(f"row ({x}, {y}) breaks y = u*x mod p")
            if (x * x + y * y) % pp != 0:
                raise InvariantError(f"row ({x}, {y}) breaks x^2 + y^2 = 0 mod p")
            if u * y % pp != pp - x:
                raise InvariantError(f"row ({x}, {y}) breaks the dual identity u*y = -x mod p")
            prev_y = y


@dataclass(frozen=True)
class Decomposition:
    """p = a^2 + b^2 with 0 < a < b, checked exactly on construction."""

    p: PrimeOneMod4
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (0 < self.a < self.b < self.p.p):
            raise InvariantError(f"decomposition ({self.a}, {self.b}) is not normalized for p={self.p.p}")
        if self.a * self.a + self.b * self.b != self.p.p:
            raise InvariantError(f"{self.a}^2 + {self.b}^2 != {self.p.p}")


@dataclass(frozen=True)
class UniquenessCertificate:
    """The two smallest sorted residues and R, witnessing y1 <= R < y2."""

    y1: int
    y2: int
    r: int


class GapCase(str, Enum):
    BASE = "base"
    TAIL_WRAP = "tail_wrap"
    ASCENDING = "ascending"
    DESCENDING = "descending"


@dataclass(frozen=True)
class GapWitness:
    """One qualifying telescoping difference and where it lands in the table.

    gap_index k refers to the k-th difference of the chain
    0, y_1, ..., y_R, p (so k = 0 is y_1 itself and k = R is p - y_R).
    implied_small is the table residue the case argument produces; it always
    satisfies y_1 <= implied_small <= R.
    """

    p: int
    u: int
    r: int
    gap_index: int
    gap_value: int
    case: GapCase
    implied_small: int


@dataclass(frozen=True)
class ThueWitness:
    """A multiplier x with 1 <= |x| <= floor_sqrt(m) minimizing a*x mod m."""

    m: int
    a: int
    x: int
    value: int


def residue_map(p: PrimeOneMod4, u, x: int) -> int:
    """y(x) = u*x mod p for 1 <= x <= R."""
    uu = root_value(p, u)
    if not 1 <= x <= p.r:
        raise ValidationError(f"x must be in [1, {p.r}], got {x}")
    return mod_mul(uu, x, p.p)


def build_table(p: PrimeOneMod4, u, *, bound: int | None = None) -> ResidueTable:
    """Materialize and sort the residue table (Theta(R) memory).

    Refuses primes above the table bound; the streaming min_residue path
    covers those.
    """
    limit = TABLE_BOUND if bound is None else bound
    if p.p > limit:
        raise ResourceBoundError(
            f"p={p.p} exceeds the table bound {limit}; use the streaming min_residue path"
        )
    uu = root_value(p, u)
    pp = p.p
    rows = []
    y = 0
    for x in range(1, p.r + 1):
        y += uu
        if y >= pp:
            y -= pp
        rows.append((x, y))
    rows.sort(key=lambda row: row[1])
    return ResidueTable(p, uu, tuple(rows))


def min_residue(p: PrimeOneMod4, u) -> tuple[int, int]:
    """(x*, y*) minimizing y over x in 1..R, one pass, constant memory.

    Equals row 1 of build_table; the argmin is unique because the R values
    y(x) are pairwise distinct.
    """
    uu = root_value(p, u)
    pp = p.p
    best_x, best_y = 0, pp
    y = 0
    for x in range(1, p.r + 1):
        y += uu
        if y >= pp:
            y -= pp
        if y < best_y:
            best_x, best_y = x, y
    return best_x, best_y


def two_squares(p: PrimeOneMod4) -> Decomposition:
    """Decompose p = a^2 + b^2 via the streaming residue minimum.

    The minimum y* is asserted to be <= R and the final equation is checked
    exactly; both are guaranteed for valid p, so a failure is a defect.
    """
    w = find_witness_euler(p)
    x, y = min_residue(p, w.u)
    if y > p.r:
        raise InvariantError(f"minimum residue {y} exceeds R={p.r} for p={p.p}")
    a, b = (x, y) if x < y else (y, x)
    if a * a + b * b != p.p:
        raise InvariantError(f"{a}^2 + {b}^2 != {p.p}")
    return Decomposition(p, a, b)


def verify_uniqueness(t: ResidueTable) -> UniquenessCertificate:
    """Certify y1 <= R < y2, which pins the decomposition to row 1."""
    if len(t.rows) < 2:
        raise ValidationError("uniqueness certificate needs a table with at least 2 rows")
    y1 = t.rows[0][1]
    y2 = t.rows[1][1]
    r = t.p.r
    if not y1 <= r < y2:
        raise InvariantError(f"sorted residues of p={t.p.p} violate y1 <= R < y2: ({y1}, {y2}, {r})")
    return UniquenessCertificate(y1, y2, r)


def parity_identity(n: int, d1: tuple[int, int], d2: tuple[int, int]) -> tuple[int, int]:
    """Check (y2-y1)^2 + (x1-x2)^2 == 2n - 2(x1*x2 + y1*y2) and return both sides.

    Requires two representations x^2 + y^2 = n ordered so x2 < x1 and
    y1 < y2.  The identity is algebraic; for an odd prime n both sides
    being even is what forbids a second representation.
    """
    x1, y1 = d1
    x2, y2 = d2
    if x1 * x1 + y1 * y1 != n or x2 * x2 + y2 * y2 != n:
        raise ValidationError(f"both pairs must satisfy x^2 + y^2 = {n}")
    if not (x2 < x1 and y1 < y2):
        raise ValidationError(f"pairs must be ordered x2 < x1 and y1 < y2, got {d1}, {d2}")
    lhs = (y2 - y1) ** 2 + (x1 - x2) ** 2
    rhs = 2 * n - 2 * (x1 * x2 + y1 * y2)
    if lhs != rhs:
        raise InvariantError(f"parity identity failed for n={n}, {d1}, {d2}")
    return lhs, rhs


def telescoping_diffs(t: ResidueTable) -> list[int]:
    """The R+1 consecutive differences of 0, y_1, ..., y_R, p (they sum to p)."""
    ys = [y for _, y in t.rows]
    chain = [0] + ys + [t.p.p]
    return [chain[i + 1] - chain[i] for i in range(len(chain) - 1)]


def _classify_gap(t: ResidueTable, k: int, gap: int, x_by_y: dict[int, int]) -> GapWitness:
    pp, r, u = t.p.p, t.p.r, t.u
    rows = t.rows
    y1 = rows[0][1]
    if k == 0:
        case = GapCase.BASE
        implied = y1
    elif k == r:
        case = GapCase.TAIL_WRAP
        x_last = rows[-1][0]
        if u * gap % pp != x_last:
            raise InvariantError(f"tail wrap congruence failed at p={pp}: u*(p-y_R) != x_R")
        if x_by_y.get(x_last) != gap:
            raise InvariantError(f"tail wrap row ({gap}, {x_last}) missing for p={pp}")
        implied = x_last
    else:
        x_lo, y_lo = rows[k - 1]
        x_hi, y_hi = rows[k]
        dy = y_hi - y_lo
        if x_hi > x_lo:
            case = GapCase.ASCENDING
            dx = x_hi - x_lo
            if x_by_y.get(dy) != dx:
                raise InvariantError(f"ascending row ({dx}, {dy}) missing for p={pp}")
            implied = dy
        else:
            case = GapCase.DESCENDING
            dx = x_lo - x_hi
            if x_by_y.get(dx) != dy:
                raise InvariantError(f"descending row ({dy}, {dx}) missing for p={pp}")
            implied = dx
    if not y1 <= implied <= r:
        raise InvariantError(f"implied residue {implied} outside [y1={y1}, R={r}] for p={pp}")
    return GapWitness(pp, u, r, k, gap, case, implied)


def gap_witness(t: ResidueTable) -> GapWitness:
    """Classify the smallest-index telescoping difference that is <= R.

    One always exists: R+1 differences all > R would sum past (R+1)^2 > p.
    """
    r = t.p.r
    diffs = telescoping_diffs(t)
    x_by_y = {y: x for x, y in t.rows}
    for k, gap in enumerate(diffs):
        if gap <= r:
            return _classify_gap(t, k, gap, x_by_y)
    raise InvariantError(f"no telescoping difference <= R for p={t.p.p}")


def all_gap_witnesses(t: ResidueTable) -> tuple[GapWitness, ...]:
    """Diagnostic mode: classify and check every qualifying difference."""
    r = t.p.r
    diffs = telescoping_diffs(t)
    x_by_y = {y: x for x, y in t.rows}
    found = tuple(
        _classify_gap(t, k, gap, x_by_y) for k, gap in enumerate(diffs) if gap <= r
    )
    if not found:
        raise InvariantError(f"no telescoping difference <= R for p={t.p.p}")
    return found


def thue_min(a: int, m: int, *, positive_only: bool = False) -> ThueWitness:
    """Exhaustively minimize a*x mod m over 1 <= |x| <= floor_sqrt(m).

    Ties break toward the smallest |x|, positive before negative.  In the
    default two-sided mode the result is asserted to be below sqrt(m); with
    positive_only the one-sided minimum is returned unasserted (it can reach
    sqrt(m) for composite m).
    """
    if m < 2:
        raise ValidationError(f"modulus must be >= 2, got {m}")
    if a < 0 or math.gcd(a, m) != 1:
        raise ValidationError(f"a={a} and m={m} must be coprime (a nonnegative)")
    k = math.isqrt(m)
    step = a % m  # same residues, and keeps the walk's stride positive
    residues = [v % m for v in range(step, step * k + 1, step)]
    v_pos = min(residues)
    if positive_only:
        value, x = v_pos, residues.index(v_pos) + 1
        return ThueWitness(m, a, x, value)
    top = max(residues)
    v_neg = m - top  # a*(-x) mod m = m - (a*x mod m); residues are never 0
    if v_pos < v_neg:
        value, x = v_pos, residues.index(v_pos) + 1
    elif v_neg < v_pos:
        value, x = v_neg, -(residues.index(top) + 1)
    else:
        x_pos = residues.index(v_pos) + 1
        x_neg = residues.index(top) + 1
        value, x = (v_pos, x_pos) if x_pos <= x_neg else (v_neg, -x_neg)
    if value * value >= m:
        raise InvariantError(f"thue minimum {value} not below sqrt({m}) for a={a}")
    return ThueWitness(m, a, x, value)
