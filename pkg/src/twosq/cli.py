"""Command-line front end.

Commands: decompose, trace, scan, thue, bench, sqrtm1.  Results go to
stdout (text or JSON), diagnostics to stderr.  Exit codes: 0 success,
1 invariant failure, 2 invalid input, 3 resource-bound refusal.

The environment variable TWOSQ_TABLE_BOUND overrides the bound on the
table-materializing paths (trace, scan).
"""

import argparse
import functools
import json
import math
import os
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import PrimeOneMod4, is_prime, make_prime_1mod4
from .errors import InvariantError, ResourceBoundError, ValidationError
from .oracles import cornacchia, cross_validate
from .squares import (
    TABLE_BOUND,
    GapWitness,
    ResidueTable,
    all_gap_witnesses,
    build_table,
    telescoping_diffs,
    thue_min,
    two_squares,
    verify_uniqueness,
)
from .witness import (
    PAIRING_BOUND,
    InversePairing,
    find_witness_euler,
    find_witness_pairing,
    first_nonresidue,
    inverse_pairing,
)

# Scans re-check the pairing argument only this far (it is Theta(p) per prime).
SCAN_PAIRING_BOUND = 10**4

# Rows shown on each side when a trace table is elided.
TRACE_ROW_CAP = 10

PAPER_BENCH_MAX_BITS = 40
CORNACCHIA_BENCH_MAX_BITS = 62
BENCH_MIN_BITS = 3

_CASE_NAMES = ("base", "tail_wrap", "ascending", "descending")


def _table_bound() -> int:
    raw = os.environ.get("TWOSQ_TABLE_BOUND")
    if raw is None:
        return TABLE_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise ValidationError(f"TWOSQ_TABLE_BOUND must be an integer, got {raw!r}") from None
    if bound < 5:
        raise ValidationError(f"TWOSQ_TABLE_BOUND must be >= 5, got {bound}")
    return bound


# ---------------------------------------------------------------------------
# decompose


def cmd_decompose(args: argparse.Namespace) -> int:
    p = make_prime_1mod4(args.p)
    d = two_squares(p)
    print(f"{p.p} = {d.a}^2 + {d.b}^2")
    return 0


# ---------------------------------------------------------------------------
# trace


@dataclass
class TraceRecord:
    """Everything the construction produced for one prime, re-checked on emit."""

    table: ResidueTable
    a: int
    b: int
    gaps: tuple[GapWitness, ...]
    pairing: InversePairing | None

    def validate(self) -> None:
        self.table.validate()
        p = self.table.p
        if self.a * self.a + self.b * self.b != p.p:
            raise InvariantError(f"trace decomposition {self.a}^2 + {self.b}^2 != {p.p}")
        y1, y2 = self.table.rows[0][1], self.table.rows[1][1]
        if not y1 <= p.r < y2:
            raise InvariantError(f"trace certificate violated for p={p.p}")
        for g in self.gaps:
            if not y1 <= g.implied_small <= p.r:
                raise InvariantError(f"trace gap {g.gap_index} out of range for p={p.p}")
        if self.pairing is not None:
            n_pairs = len(self.pairing.pairs)
            if n_pairs != (p.p - 3) // 2 or n_pairs % 2 == 0:
                raise InvariantError(f"trace pairing count wrong for p={p.p}")

    def to_dict(self, full_table: bool = False) -> dict:
        self.validate()
        p = self.table.p
        rows = [[x, y] for x, y in self.table.rows]
        elided = not full_table and len(rows) > 2 * TRACE_ROW_CAP
        if elided:
            rows = rows[:TRACE_ROW_CAP] + rows[-TRACE_ROW_CAP:]
        pairing = None
        if self.pairing is not None:
            pairing = {
                "pair_count": len(self.pairing.pairs),
                "fixed_pair": list(self.pairing.fixed_pair),
            }
        return {
            "p": p.p,
            "u": self.table.u,
            "r": p.r,
            "rows": rows,
            "row_count": len(self.table.rows),
            "rows_elided": elided,
            "y1": self.table.rows[0][1],
            "y2": self.table.rows[1][1],
            "a": self.a,
            "b": self.b,
            "gaps": [
                {
                    "gap_index": g.gap_index,
                    "gap_value": g.gap_value,
                    "case": g.case.value,
                    "implied_small": g.implied_small,
                }
                for g in self.gaps
            ],
            "pairing": pairing,
        }

    def to_text(self, full_table: bool = False) -> str:
        d = self.to_dict(full_table)
        lines = [f"p = {d['p']}  u = {d['u']}  r = {d['r']}"]
        lines.append("rows (x, y) sorted by y" + (" [elided]" if d["rows_elided"] else "") + ":")
        lines.extend(f"  ({x}, {y})" for x, y in d["rows"])
        lines.append(f"certificate: y1 = {d['y1']} <= r = {d['r']} < y2 = {d['y2']}")
        lines.append(f"decomposition: {d['p']} = {d['a']}^2 + {d['b']}^2")
        lines.append("qualifying gaps:")
        lines.extend(
            f"  index {g['gap_index']}: value {g['gap_value']}, case {g['case']}, "
            f"implied small {g['implied_small']}"
            for g in d["gaps"]
        )
        if d["pairing"] is None:
            lines.append("pairing: skipped (p above desk-scale bound)")
        else:
            u, v = d["pairing"]["fixed_pair"]
            lines.append(f"pairing: {d['pairing']['pair_count']} pairs, fixed pair {{{u}, {v}}}")
        return "\n".join(lines)


def build_trace(p: PrimeOneMod4, *, bound: int | None = None) -> TraceRecord:
    w = find_witness_euler(p)
    t = build_table(p, w, bound=bound)
    verify_uniqueness(t)
    d = two_squares(p)
    gaps = all_gap_witnesses(t)
    pairing = inverse_pairing(p) if p.p <= PAIRING_BOUND else None
    return TraceRecord(t, d.a, d.b, gaps, pairing)


def cmd_trace(args: argparse.Namespace) -> int:
    bound = _table_bound()
    p = make_prime_1mod4(args.p)
    if p.p > bound:
        raise ResourceBoundError(
            f"p={p.p} exceeds the table bound {bound}; use 'decompose' for the streaming path"
        )
    record = build_trace(p, bound=bound)
    if args.format == "json":
        print(json.dumps(record.to_dict(args.full_table), indent=2))
    else:
        print(record.to_text(args.full_table))
    return 0


# ---------------------------------------------------------------------------
# scan


@dataclass
class ScanStats:
    """Aggregate of one range scan; serialization is byte-deterministic."""

    lo: int
    hi: int
    primes_processed: int
    case_counts: dict[str, int]
    all_gap_case_counts: dict[str, int]
    y1_ratios: list[float]
    min_gap_equals_r_count: int
    failure_details: list[str]

    def to_dict(self) -> dict:
        if sum(self.case_counts.values()) != self.primes_processed:
            raise InvariantError("case counts do not sum to primes processed")
        ratios = sorted(self.y1_ratios)
        n = len(ratios)
        dist = {
            "min": ratios[0] if n else None,
            "max": ratios[-1] if n else None,
            "mean": sum(self.y1_ratios) / n if n else None,
            "deciles": [ratios[min(n - 1, k * n // 10)] for k in range(1, 10)] if n else [],
        }
        return {
            "lo": self.lo,
            "hi": self.hi,
            "primes_processed": self.primes_processed,
            "case_counts": {name: self.case_counts.get(name, 0) for name in _CASE_NAMES},
            "all_gap_case_counts": {
                name: self.all_gap_case_counts.get(name, 0) for name in _CASE_NAMES
            },
            "y1_over_sqrt_p": dist,
            "min_gap_equals_r_count": self.min_gap_equals_r_count,
            "failures": len(self.failure_details),
            "failure_details": self.failure_details,
        }


def _scan_prime(n: int, table_bound: int) -> dict:
    """Run every per-prime check; returns a picklable record (never raises)."""
    try:
        p = make_prime_1mod4(n)
        cross_validate(p)
        w = find_witness_euler(p)
        t = build_table(p, w, bound=table_bound)
        cert = verify_uniqueness(t)
        gaps = all_gap_witnesses(t)
        case_counts = {name: 0 for name in _CASE_NAMES}
        for g in gaps:
            case_counts[g.case.value] += 1
        if n <= SCAN_PAIRING_BOUND:
            pairing = inverse_pairing(p)
            n_pairs = len(pairing.pairs)
            if n_pairs != (n - 3) // 2 or n_pairs % 2 == 0:
                raise InvariantError(f"pairing count {n_pairs} wrong for p={n}")
            fixed = [pair for pair in pairing.pairs if pair[0] + pair[1] == n]
            if len(fixed) != 1 or fixed[0] != pairing.fixed_pair:
                raise InvariantError(f"fixed pair not unique for p={n}")
            if find_witness_pairing(p).u != w.u:
                raise InvariantError(f"pairing and euler witnesses disagree for p={n}")
        return {
            "p": n,
            "case": gaps[0].case.value,
            "all_cases": case_counts,
            "y1_ratio": cert.y1 / math.sqrt(n),
            "min_gap_equals_r": min(telescoping_diffs(t)) == p.r,
            "failure": None,
        }
    except (ValidationError, ResourceBoundError, InvariantError) as exc:
        return {"p": n, "failure": f"{type(exc).__name__}: {exc}"}


def _scan_range(lo: int, hi: int, jobs: int, table_bound: int) -> ScanStats:
    start = lo + (1 - lo) % 4  # first candidate = 1 (mod 4) at or after lo
    candidates = [n for n in range(start, hi + 1, 4) if n >= 5 and is_prime(n)]
    worker = functools.partial(_scan_prime, table_bound=table_bound)
    if jobs > 1 and len(candidates) > 1:
        chunk = max(1, len(candidates) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(worker, candidates, chunksize=chunk))
    else:
        records = [worker(n) for n in candidates]

    stats = ScanStats(lo, hi, 0, {}, {}, [], 0, [])
    for rec in records:  # ascending p, so float accumulation order is fixed
        if rec["failure"] is not None:
            stats.failure_details.append(f"p={rec['p']}: {rec['failure']}")
            continue
        stats.primes_processed += 1
        stats.case_counts[rec["case"]] = stats.case_counts.get(rec["case"], 0) + 1
        for name, count in rec["all_cases"].items():
            stats.all_gap_case_counts[name] = stats.all_gap_case_counts.get(name, 0) + count
        stats.y1_ratios.append(rec["y1_ratio"])
        if rec["min_gap_equals_r"]:
            stats.min_gap_equals_r_count += 1
    return stats


def cmd_scan(args: argparse.Namespace) -> int:
    bound = _table_bound()
    if args.lo > args.hi:
        raise ValidationError(f"empty range: lo={args.lo} > hi={args.hi}")
    if args.hi > bound:
        raise ResourceBoundError(f"hi={args.hi} exceeds the table bound {bound}")
    if args.jobs < 1:
        raise ValidationError(f"--jobs must be >= 1, got {args.jobs}")
    stats = _scan_range(args.lo, args.hi, args.jobs, bound)
    payload = json.dumps(stats.to_dict(), indent=2)
    print(payload)
    if args.stats_out:
        with open(args.stats_out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return 0 if not stats.failure_details else 1


# ---------------------------------------------------------------------------
# thue


def cmd_thue(args: argparse.Namespace) -> int:
    w = thue_min(args.a, args.m)
    print(
        f"min <{args.a}*x>_{args.m} = {w.value} at x = {w.x}, "
        f"bound sqrt({args.m}) ≈ {math.sqrt(args.m):.6f}"
    )
    return 0


# ---------------------------------------------------------------------------
# bench


def sample_primes_1mod4(bits: int, count: int, rng: random.Random) -> list[int]:
    """count random primes = 1 (mod 4) of exactly `bits` bits (duplicates allowed)."""
    if bits < BENCH_MIN_BITS:
        raise ValidationError(f"bit size must be >= {BENCH_MIN_BITS}, got {bits}")
    top = 1 << (bits - 1)
    out = []
    while len(out) < count:
        c = rng.getrandbits(bits) | top
        c -= (c - 1) % 4
        if c < top or not is_prime(c):
            continue
        out.append(c)
    return out


def _bench_method(method: str, primes: list[int]) -> dict:
    times = []
    for n in primes:
        p = make_prime_1mod4(n)
        t0 = time.perf_counter()
        if method == "paper":
            d = two_squares(p)
        else:
            d = cornacchia(p, find_witness_euler(p))
        times.append(time.perf_counter() - t0)
        if d.a * d.a + d.b * d.b != n:
            raise InvariantError(f"bench verification failed for p={n} via {method}")
    mean = statistics.mean(times)
    return {
        "mean_ms": mean * 1e3,
        "median_ms": statistics.median(times) * 1e3,
        "per_sec": 1.0 / mean if mean > 0 else float("inf"),
    }


def cmd_bench(args: argparse.Namespace) -> int:
    methods = ["paper", "cornacchia"] if args.method == "both" else [args.method]
    max_bits = PAPER_BENCH_MAX_BITS if "paper" in methods else CORNACCHIA_BENCH_MAX_BITS
    if not BENCH_MIN_BITS <= args.bits <= max_bits:
        raise ValidationError(
            f"--bits={args.bits} out of range for method '{args.method}' "
            f"(allowed {BENCH_MIN_BITS}..{max_bits})"
        )
    if args.count < 1:
        raise ValidationError(f"--count must be >= 1, got {args.count}")
    primes = sample_primes_1mod4(args.bits, args.count, random.Random(args.seed))
    print(f"bits={args.bits} count={args.count} seed={args.seed}")
    print(f"{'method':<12} {'mean_ms':>10} {'median_ms':>10} {'per_sec':>12}")
    for method in methods:
        row = _bench_method(method, primes)
        print(
            f"{method:<12} {row['mean_ms']:>10.4f} {row['median_ms']:>10.4f} "
            f"{row['per_sec']:>12.1f}"
        )
    print("all decompositions verified")
    return 0


# ---------------------------------------------------------------------------
# sqrtm1


def cmd_sqrtm1(args: argparse.Namespace) -> int:
    p = make_prime_1mod4(args.p)
    w = find_witness_euler(p)
    print(f"p = {p.p}")
    print(f"euler:   u = {w.u} (first nonresidue n = {first_nonresidue(p)})")
    if p.p <= PAIRING_BOUND:
        pairing = inverse_pairing(p)
        u, v = pairing.fixed_pair
        print(f"pairing: u = {u} ({len(pairing.pairs)} pairs, fixed pair {{{u}, {v}}})")
        if u != w.u:
            raise InvariantError(f"witness paths disagree for p={p.p}: euler {w.u}, pairing {u}")
    else:
        print(f"pairing: skipped (p above desk-scale bound {PAIRING_BOUND})")
    return 0


# ---------------------------------------------------------------------------
# parser / entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twosq",
        description="Decompose primes p = 1 (mod 4) into two squares, with "
        "machine-checkable construction traces and independent cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("decompose", help="print p = a^2 + b^2")
    sp.add_argument("p", type=int)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("trace", help="emit the full construction record for p")
    sp.add_argument("p", type=int)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--full-table", action="store_true", help="never elide table rows")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("scan", help="verify every prime = 1 (mod 4) in [lo, hi]")
    sp.add_argument("lo", type=int)
    sp.add_argument("hi", type=int)
    sp.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sp.add_argument("--stats-out", metavar="PATH", help="also write the stats JSON here")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("thue", help="minimal residue of a*x mod m over 1 <= |x| <= sqrt(m)")
    sp.add_argument("a", type=int)
    sp.add_argument("m", type=int)
    sp.set_defaults(func=cmd_thue)

    sp = sub.add_parser("bench", help="time the decomposition methods on random primes")
    sp.add_argument(
        "--method",
        choices=("paper", "cornacchia", "both"),
        default="both",
        help="paper = sorted-residue minimum construction; cornacchia = Euclidean descent",
    )
    sp.add_argument("--bits", type=int, default=30)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("sqrtm1", help="show both square-root-of-minus-one witness paths")
    sp.add_argument("p", type=int)
    sp.set_defaults(func=cmd_sqrtm1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ResourceBoundError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
