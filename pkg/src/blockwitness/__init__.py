"""Exact-arithmetic witnesses for principal blocks of symmetric groups.

The package constructs, for a degree n and distinct primes p and q, a
partition whose symmetric-group character lies in the principal block of one
prime, has degree coprime to that prime and divisible by the other, and
restricts irreducibly to the alternating group.  A brute-force oracle checks
the same conditions by exhausting all partitions, and a table auditor
evaluates the corresponding block-theoretic properties on externally
supplied character-table summaries.
"""

from .factored import (
    FactoredNatural,
    NotDivisible,
    factor,
    factorial_factored,
    is_prime,
    primes_up_to,
)
from .partitions import (
    AscendingSpec,
    NonMonotoneSpec,
    LengthTooSmall,
    Partition,
    from_ascending_spec,
    partition_count,
    partitions_of,
)
from .parameters import CaseParameters, NotPrime, PrimeExceedsN, derive_case_parameters
from .degrees import (
    CaseQuantities,
    DegreeFacts,
    UndefinedQuantity,
    case_quantities,
    degree,
    degree_facts,
    degree_valuation,
)
from .blocks import (
    BlockLabel,
    block_label,
    irr_p_prime_principal,
    principal_block_contains,
    principal_block_members,
)
from .witness import (
    AbelianSylowDeferred,
    CaseTreeFalsified,
    SmallN,
    SpecSumMismatch,
    VerificationFailure,
    Witness,
    WitnessCandidate,
    candidate_list,
    construct_witness,
    verify_candidate,
)
from .oracle import (
    ConjectureReport,
    CrossValidation,
    check_conjB,
    check_conjC,
    cross_validate,
    prime_pairs,
    witness_sets,
)
from .tables import (
    AuditFinding,
    CharacterRow,
    CharacterTableSummary,
    ParseError,
    audit,
    build_sn_summary,
    export_sn_table,
    parse_table,
    serialize_table,
)

__all__ = [
    "AbelianSylowDeferred",
    "AscendingSpec",
    "AuditFinding",
    "BlockLabel",
    "CaseParameters",
    "CaseQuantities",
    "CaseTreeFalsified",
    "CharacterRow",
    "CharacterTableSummary",
    "ConjectureReport",
    "CrossValidation",
    "DegreeFacts",
    "FactoredNatural",
    "LengthTooSmall",
    "NonMonotoneSpec",
    "NotDivisible",
    "NotPrime",
    "ParseError",
    "Partition",
    "PrimeExceedsN",
    "SmallN",
    "SpecSumMismatch",
    "UndefinedQuantity",
    "VerificationFailure",
    "Witness",
    "WitnessCandidate",
    "audit",
    "block_label",
    "build_sn_summary",
    "candidate_list",
    "case_quantities",
    "check_conjB",
    "check_conjC",
    "construct_witness",
    "cross_validate",
    "degree",
    "degree_facts",
    "degree_valuation",
    "derive_case_parameters",
    "export_sn_table",
    "factor",
    "factorial_factored",
    "from_ascending_spec",
    "irr_p_prime_principal",
    "is_prime",
    "parse_table",
    "partition_count",
    "partitions_of",
    "prime_pairs",
    "primes_up_to",
    "principal_block_contains",
    "principal_block_members",
    "serialize_table",
    "verify_candidate",
    "witness_sets",
]
