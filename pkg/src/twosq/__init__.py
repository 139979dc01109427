"""twosq: self-verifying two-squares decomposition of primes p = 1 (mod 4).

The pipeline finds a square root u of -1 mod p, takes the minimum of
u*x mod p over 1 <= x <= floor_sqrt(p), and reads the decomposition
p = a^2 + b^2 off that minimum.  Every step is certifiable: the sorted
residue table, the y1 <= R < y2 uniqueness certificate, the pigeonhole
gap descent, and agreement with Cornacchia's algorithm and brute-force
enumeration.
"""

from .arith import (
    WORD_BOUND,
    PrimeOneMod4,
    floor_sqrt,
    is_prime,
    least_residue,
    make_prime_1mod4,
    mod_mul,
    mod_pow,
)
from .errors import InvariantError, ResourceBoundError, ValidationError
from .oracles import (
    BRUTE_FORCE_BOUND,
    AgreementReport,
    RepresentationSet,
    brute_force_two_squares,
    cornacchia,
    cross_validate,
)
from .squares import (
    TABLE_BOUND,
    Decomposition,
    GapCase,
    GapWitness,
    ResidueTable,
    ThueWitness,
    UniquenessCertificate,
    all_gap_witnesses,
    build_table,
    gap_witness,
    min_residue,
    parity_identity,
    residue_map,
    telescoping_diffs,
    thue_min,
    two_squares,
    verify_uniqueness,
)
from .witness import (
    PAIRING_BOUND,
    InversePairing,
    SqrtM1Witness,
    find_witness_euler,
    find_witness_pairing,
    first_nonresidue,
    inverse_pairing,
    root_value,
)

__version__ = "0.1.0"

__all__ = [
    "AgreementReport",
    "BRUTE_FORCE_BOUND",
    "Decomposition",
    "GapCase",
    "GapWitness",
    "InvariantError",
    "InversePairing",
    "PAIRING_BOUND",
    "PrimeOneMod4",
    "RepresentationSet",
    "ResidueTable",
    "ResourceBoundError",
    "SqrtM1Witness",
    "TABLE_BOUND",
    "ThueWitness",
    "UniquenessCertificate",
    "ValidationError",
    "WORD_BOUND",
    "all_gap_witnesses",
    "brute_force_two_squares",
    "build_table",
    "cornacchia",
    "cross_validate",
    "find_witness_euler",
    "find_witness_pairing",
    "first_nonresidue",
    "floor_sqrt",
    "gap_witness",
    "inverse_pairing",
    "is_prime",
    "least_residue",
    "make_prime_1mod4",
    "min_residue",
    "mod_mul",
    "mod_pow",
    "parity_identity",
    "residue_map",
    "root_value",
    "telescoping_diffs",
    "thue_min",
    "two_squares",
    "verify_uniqueness",
]
