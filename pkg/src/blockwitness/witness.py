"""Candidate construction and verification of principal-block witnesses.

Given n >= 9 and distinct primes q < p <= n with n // p > 1, the engine
produces a partition whose character sits in the principal block of one of
the two primes (the host), has degree coprime to the host, degree divisible
by the other prime (the divisor), and is not self-conjugate, so the same
character witnesses the alternating group by restriction.

The construction is a case split on the parameter record:

    case I    r > 0
      I.a                b = 0:        (1^(mp-r-1), 1+r)            host p
      I.b                0 < r != b:   (1^(mp-r-1), 1+min, max)     host p
      I.b-fallback                      (1^mp, b)                   host p
      I.c                b = r > 0:    (1^r, r+1, wq-1)             host p
      I.c-fallback1                     (1^(wq-2), 1+r, 1+r)        host p
      I.c-fallback2-qodd  q odd, r > 1: (1^mp, r)                   host p
      I.c-fallback2-r1    q odd, r = 1: (1^(n-2), 2)                host q
      I.c-fallback2-q2    q = 2:        (1^(n-2), 2)                host q
    case II   r = 0 and A1 < B1   (A1, B1 the lowest base-q / base-p
                                   summands of mp)
      II.a               b = 0:        (1^(mp-A1-1), 1+A1)          host p
      II.b               b != A1:      (1^(mp-A1-1), 1+min, max)    host p
      II.b-fallback                     (1^mp, b)                   host p
      II.c               b = A1:       (1^(mp-b-2), b+1, b+1)       host p
      II.c-alt           p = b+1, p | m-1:  (1^(mp-p), b+p)         host p
      II.c-alt-q2        q = 2, t2 = t1+1:  (1^(mp-1), b+1)         host q
    case III  r = 0 and A1 > B1
      III.a              b = 0:        (1^(mp-B1-1), 1+B1)          host q
      III.b              b > 0:        (1^(mp-B1-1), b+1, B1)       host q
      III.b-alt1                        (b+1, mp-1)                 host p
      III.b-alt2                        (1^mp, b)                   host p
      III.b-final                       (1^(mp-1), 1+b)             host q

Candidates are tried in this order and each one is verified from scratch:
block membership, both degree valuations, and self-conjugacy are recomputed
rather than predicted by side conditions.  A parameter record for which no
candidate verifies raises :class:`CaseTreeFalsified`, which is the whole
point of running the engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import principal_block_contains
from .degrees import degree
from .factored import FactoredNatural
from .parameters import CaseParameters, derive_case_parameters
from .partitions import AscendingSpec, Partition

CASE_IDS = (
    "I.a",
    "I.b",
    "I.b-fallback",
    "I.c",
    "I.c-fallback1",
    "I.c-fallback2-qodd",
    "I.c-fallback2-r1",
    "I.c-fallback2-q2",
    "II.a",
    "II.b",
    "II.b-fallback",
    "II.c",
    "II.c-alt",
    "II.c-alt-q2",
    "III.a",
    "III.b",
    "III.b-alt1",
    "III.b-alt2",
    "III.b-final",
)


class WitnessDeferred(Exception):
    """The construction does not apply; the verdict comes from elsewhere."""


class SmallN(WitnessDeferred):
    """n < 9: handled by explicit character-table data, not construction."""


class AbelianSylowDeferred(WitnessDeferred):
    """n // p <= 1: the Sylow p-subgroup is abelian and out of scope here."""


class SpecSumMismatch(ValueError):
    """A candidate spec does not sum to n; a case branch is mistranscribed."""


class InternalInvariantError(RuntimeError):
    """A relation that must hold for every valid record failed."""


class CaseTreeFalsified(RuntimeError):
    """No candidate verified for a parameter record inside the case tree."""

    def __init__(self, params: CaseParameters, failures: list["VerificationFailure"]):
        self.params = params
        self.failures = failures
        attempted = ", ".join(f.candidate.case_id for f in failures)
        super().__init__(
            f"no candidate verified for n={params.n} p={params.p} q={params.q}"
            f" (tried: {attempted})"
        )


@dataclass(frozen=True)
class WitnessCandidate:
    """One candidate shape with its intended host and divisor primes."""

    case_id: str
    spec: AscendingSpec
    host_prime: int
    divisor_prime: int


@dataclass(frozen=True)
class Witness:
    """A verified candidate; every recorded fact was recomputed, not trusted."""

    candidate: WitnessCandidate
    partition: Partition
    degree: FactoredNatural
    host_valuation: int
    divisor_valuation: int
    self_conjugate: bool
    candidate_index: int = 0


@dataclass(frozen=True)
class VerificationFailure:
    """A candidate that failed verification, with the violated condition."""

    candidate: WitnessCandidate
    partition: Partition
    reason: str


def _ones_then(ones: int, *tail: int) -> AscendingSpec:
    return AscendingSpec(((1, ones),) + tuple((value, 1) for value in tail))


def candidate_list(params: CaseParameters) -> tuple[WitnessCandidate, ...]:
    """The ordered candidates for the record's active case.

    Raises :class:`SmallN` for n < 9 and :class:`AbelianSylowDeferred` for
    m <= 1; both regimes are covered by other means and carry no candidates.
    """
    if params.n < 9:
        raise SmallN(f"n={params.n} < 9 is deferred to table data")
    if params.m <= 1:
        raise AbelianSylowDeferred(
            f"m={params.m} <= 1 for n={params.n}, p={params.p}"
        )
    p, q = params.p, params.q
    n, mp, b, w, r = params.n, params.mp, params.b, params.w, params.r

    def cand(case_id: str, spec: AscendingSpec, host: int, divisor: int) -> WitnessCandidate:
        return WitnessCandidate(case_id, spec, host, divisor)

    out: list[WitnessCandidate] = []
    if r > 0:
        if b == 0:
            out.append(cand("I.a", _ones_then(mp - r - 1, 1 + r), p, q))
        elif r != b:
            low, high = (r, b) if r < b else (b, r)
            out.append(cand("I.b", _ones_then(mp - r - 1, 1 + low, high), p, q))
            out.append(cand("I.b-fallback", _ones_then(mp, b), p, q))
        else:
            # b = r > 0; r + 1 < wq holds whenever m > 1
            if not r + 1 < w * q:
                raise InternalInvariantError(
                    f"r+1 >= wq at n={n}, p={p}, q={q} despite m > 1"
                )
            out.append(cand("I.c", _ones_then(r, r + 1, w * q - 1), p, q))
            out.append(cand("I.c-fallback1", _ones_then(w * q - 2, 1 + r, 1 + r), p, q))
            if q == 2:
                out.append(cand("I.c-fallback2-q2", _ones_then(n - 2, 2), q, p))
            elif r == 1:
                # (1^mp, r) degenerates to the all-ones shape at r = 1, and the
                # two candidates above both lose their q-part there; the width-2
                # hook has degree mp and q-core (2) = (n mod q) exactly when
                # r = 1, so it hosts at q the same way the q = 2 branch does.
                out.append(cand("I.c-fallback2-r1", _ones_then(n - 2, 2), q, p))
            else:
                out.append(cand("I.c-fallback2-qodd", _ones_then(mp, r), p, q))
    else:
        a1q = params.low_q_part
        b1p = params.low_p_part
        if a1q == b1p:
            # impossible: a1 < q and b1 < p make the lowest summands distinct
            raise InternalInvariantError(
                f"lowest base-q and base-p summands coincide at n={n}, p={p}, q={q}"
            )
        if a1q < b1p:
            if b == 0:
                out.append(cand("II.a", _ones_then(mp - a1q - 1, 1 + a1q), p, q))
            elif b != a1q:
                low, high = (a1q, b) if a1q < b else (b, a1q)
                out.append(cand("II.b", _ones_then(mp - a1q - 1, 1 + low, high), p, q))
                out.append(cand("II.b-fallback", _ones_then(mp, b), p, q))
            else:
                out.append(cand("II.c", _ones_then(mp - b - 2, b + 1, b + 1), p, q))
                if p == b + 1 and (params.m - 1) % p == 0:
                    if b1p != p:
                        raise InternalInvariantError(
                            f"p = b+1 and p | m-1 must force the lowest base-p"
                            f" summand to be p at n={n}, p={p}, q={q}"
                        )
                    out.append(cand("II.c-alt", _ones_then(mp - p, b + p), p, q))
                if q == 2 and params.t2 == params.t1 + 1:
                    out.append(cand("II.c-alt-q2", _ones_then(mp - 1, b + 1), q, p))
        else:
            if b == 0:
                out.append(cand("III.a", _ones_then(mp - b1p - 1, 1 + b1p), q, p))
            else:
                out.append(cand("III.b", _ones_then(mp - b1p - 1, b + 1, b1p), q, p))
                out.append(cand("III.b-alt1", _ones_then(0, b + 1, mp - 1), p, q))
                out.append(cand("III.b-alt2", _ones_then(mp, b), p, q))
                out.append(cand("III.b-final", _ones_then(mp - 1, 1 + b), q, p))
    return tuple(out)


def verify_candidate(
    candidate: WitnessCandidate, n: int, *, index: int = 0
) -> Witness | VerificationFailure:
    """Build the candidate's partition and recheck all four witness facts."""
    if candidate.spec.total != n:
        raise SpecSumMismatch(
            f"candidate {candidate.case_id} spec {candidate.spec} sums to"
            f" {candidate.spec.total}, expected {n}"
        )
    lam = candidate.spec.to_partition()
    host, divisor = candidate.host_prime, candidate.divisor_prime

    def failure(reason: str) -> VerificationFailure:
        return VerificationFailure(candidate, lam, reason)

    if not principal_block_contains(lam, host):
        return failure(f"outside the principal {host}-block")
    deg = degree(lam)
    host_val = deg.valuation(host)
    if host_val != 0:
        return failure(f"degree divisible by host prime {host}")
    divisor_val = deg.valuation(divisor)
    if divisor_val < 1:
        return failure(f"degree not divisible by {divisor}")
    if lam.is_self_conjugate():
        return failure("self-conjugate")
    return Witness(
        candidate=candidate,
        partition=lam,
        degree=deg,
        host_valuation=host_val,
        divisor_valuation=divisor_val,
        self_conjugate=False,
        candidate_index=index,
    )


def construct_witness(n: int, p: int, q: int) -> Witness:
    """First verifying candidate for (n, p, q); primes may come either way.

    Raises :class:`SmallN` or :class:`AbelianSylowDeferred` outside the
    construction's regime, and :class:`CaseTreeFalsified` if every candidate
    fails verification, which must never happen.
    """
    params = derive_case_parameters(n, p, q)
    failures: list[VerificationFailure] = []
    for index, candidate in enumerate(candidate_list(params)):
        outcome = verify_candidate(candidate, n, index=index)
        if isinstance(outcome, Witness):
            return outcome
        failures.append(outcome)
    raise CaseTreeFalsified(params, failures)
