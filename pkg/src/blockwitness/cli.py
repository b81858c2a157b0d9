"""Command-line surface over the library; deterministic output.

Exit codes: 0 success / condition verified, 1 condition failed or violation
found, 2 usage or parse error, 3 internal consistency failure (a falsified
case tree or a non-integral degree quotient), in which case a bug-report
payload is printed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import oracle, tables, witness
from .factored import NotDivisible
from .parameters import NotPrime, PrimeExceedsN, derive_case_parameters
from .partitions import Partition, parse_partition_text, partitions_of
from .degrees import degree

EXIT_OK = 0
EXIT_CONDITION_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

SCAN_MAX_ENV = "BLOCKWITNESS_SCAN_MAX"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="blockwitness", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("witness", help="construct and verify one witness")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--q", type=int, required=True)
    w.add_argument("--json", action="store_true")
    w.set_defaults(handler=_cmd_witness)

    c = sub.add_parser("verify-c", help="exhaustive cross-divisibility check")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--group", choices=("sn", "an"), default="sn")
    c.set_defaults(handler=_cmd_verify_c)

    b = sub.add_parser("verify-b", help="compare prime-to-p principal sets")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--q", type=int, required=True)
    b.set_defaults(handler=_cmd_verify_b)

    s = sub.add_parser("scan", help="grid of witnesses over all prime pairs")
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--cross-validate", action="store_true")
    s.set_defaults(handler=_cmd_scan)

    d = sub.add_parser("degrees", help="hook-length degrees")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--partition", type=str, default=None)
    d.set_defaults(handler=_cmd_degrees)

    t = sub.add_parser("check-table", help="audit a character-table file")
    t.add_argument("file", type=str)
    t.add_argument("--conjecture", choices=("a", "b", "c"), required=True)
    t.set_defaults(handler=_cmd_check_table)

    e = sub.add_parser("export-table", help="emit a symmetric-group table")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--primes", type=str, default=None,
                   help="comma-separated; defaults to all primes <= n")
    e.set_defaults(handler=_cmd_export_table)
    return parser


def _quote(detail: str) -> str:
    return '"' + detail.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _first_or_dash(partitions: frozenset[Partition]) -> str:
    if not partitions:
        return "-"
    best = max(partitions, key=lambda lam: lam.parts)
    return best.to_literal()


def _cmd_witness(args) -> int:
    try:
        found = witness.construct_witness(args.n, args.p, args.q)
    except witness.SmallN:
        print("small-n: deferred to table methods")
        return EXIT_CONDITION_FAILED
    except witness.AbelianSylowDeferred:
        print("abelian-sylow: deferred (Sylow subgroup is abelian)")
        return EXIT_CONDITION_FAILED
    facts = {
        "case": found.candidate.case_id,
        "partition": list(found.partition.parts),
        "host": found.candidate.host_prime,
        "divisor": found.candidate.divisor_prime,
        "degree": found.degree.to_decimal(),
        "factored": found.degree.factored_str(),
        "host_valuation": found.host_valuation,
        "divisor_valuation": found.divisor_valuation,
    }
    if args.json:
        print(json.dumps(facts, sort_keys=True))
    else:
        print(
            f"case={facts['case']}"
            f" partition={found.partition.to_literal()}"
            f" host={facts['host']}"
            f" divisor={facts['divisor']}"
            f" degree={facts['degree']}"
            f" factored={facts['factored']}"
            f" host_valuation={facts['host_valuation']}"
            f" divisor_valuation={facts['divisor_valuation']}"
        )
    return EXIT_OK


def _cmd_verify_c(args) -> int:
    derive_case_parameters(args.n, args.p, args.q)
    report = oracle.check_conjC(args.n, args.p, args.q, args.group)
    print(
        f"conjecture-c n={args.n} p={args.p} q={args.q} group={report.group_kind}"
        f" holds={'true' if report.condition_holds else 'false'}"
        f" p_witnesses={len(report.witnesses_p_block)}"
        f" q_witnesses={len(report.witnesses_q_block)}"
        f" example_p={_first_or_dash(report.witnesses_p_block)}"
        f" example_q={_first_or_dash(report.witnesses_q_block)}"
    )
    return EXIT_OK if report.condition_holds else EXIT_CONDITION_FAILED


def _cmd_verify_b(args) -> int:
    derive_case_parameters(args.n, args.p, args.q)
    report = oracle.check_conjB(args.n, args.p, args.q)
    violation = report.violates_equality_check
    print(
        f"conjecture-b n={args.n} p={args.p} q={args.q}"
        f" sets_equal={'true' if report.sets_equal else 'false'}"
        f" violation={'true' if violation else 'false'}"
        f" size_p={len(report.set_B_p)}"
        f" size_q={len(report.set_B_q)}"
    )
    return EXIT_CONDITION_FAILED if violation else EXIT_OK


def _cmd_scan(args) -> int:
    n_min, n_max = args.n_min, args.n_max
    cap = os.environ.get(SCAN_MAX_ENV)
    if cap is not None:
        n_max = min(n_max, int(cap))
    if n_min < 1 or n_max < n_min:
        raise _UsageError(f"empty scan range [{n_min}, {n_max}]")
    tuples = witnesses = deferred = disagreements = falsified = 0
    for n in range(n_min, n_max + 1):
        for p, q in oracle.prime_pairs(n):
            tuples += 1
            if args.cross_validate:
                try:
                    cv = oracle.cross_validate(n, p, q)
                except witness.CaseTreeFalsified as exc:
                    falsified += 1
                    print(f"internal-error: {exc}")
                    continue
                oracle_field = f" oracle={'true' if cv.oracle_condition_holds else 'false'}"
                if cv.deferral is not None:
                    deferred += 1
                    print(
                        f"result n={n} p={p} q={q} case=deferred-{cv.deferral}"
                        f" partition=- agree=na{oracle_field}"
                    )
                    continue
                witnesses += 1
                assert cv.witness is not None
                agree = "true" if cv.oracle_agrees else "false"
                if not cv.oracle_agrees:
                    disagreements += 1
                print(
                    f"result n={n} p={p} q={q} case={cv.case_id}"
                    f" partition={cv.witness.partition.to_literal()}"
                    f" agree={agree}{oracle_field}"
                )
                continue
            try:
                found = witness.construct_witness(n, p, q)
            except witness.SmallN:
                deferred += 1
                print(f"result n={n} p={p} q={q} case=deferred-small-n partition=- agree=na")
                continue
            except witness.AbelianSylowDeferred:
                deferred += 1
                print(f"result n={n} p={p} q={q} case=deferred-abelian-sylow partition=- agree=na")
                continue
            except witness.CaseTreeFalsified as exc:
                falsified += 1
                print(f"internal-error: {exc}")
                continue
            witnesses += 1
            print(
                f"result n={n} p={p} q={q} case={found.candidate.case_id}"
                f" partition={found.partition.to_literal()} agree=na"
            )
    print(
        f"scan-summary tuples={tuples} witnesses={witnesses} deferred={deferred}"
        f" disagreements={disagreements} falsified={falsified}"
    )
    if falsified:
        return EXIT_INTERNAL
    if disagreements:
        return EXIT_CONDITION_FAILED
    return EXIT_OK


def _cmd_degrees(args) -> int:
    if args.partition is not None:
        lam = parse_partition_text(args.partition)
        if lam.size != args.n:
            raise _UsageError(
                f"partition {lam.to_literal()} has size {lam.size}, expected {args.n}"
            )
        deg = degree(lam)
        print(
            f"degree partition={lam.to_literal()}"
            f" decimal={deg.to_decimal()} factored={deg.factored_str()}"
        )
        return EXIT_OK
    for lam in partitions_of(args.n):
        deg = degree(lam)
        print(
            f"degree partition={lam.to_literal()}"
            f" decimal={deg.to_decimal()} factored={deg.factored_str()}"
        )
    return EXIT_OK


def _cmd_check_table(args) -> int:
    try:
        with open(args.file, "rb") as handle:
            data = handle.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.file}: {exc}") from None
    summary = tables.parse_table(data)
    findings = tables.audit(summary, args.conjecture)
    worst = EXIT_OK
    for finding in findings:
        print(
            f"finding {finding.conjecture} {finding.p} {finding.q}"
            f" {finding.verdict} {_quote(finding.detail)}"
        )
        if finding.verdict == "violation":
            worst = EXIT_CONDITION_FAILED
    return worst


def _cmd_export_table(args) -> int:
    if args.primes is None:
        from .factored import primes_up_to

        primes = tuple(primes_up_to(args.n))
    elif args.primes.strip() == "":
        primes = ()
    else:
        primes = tuple(int(tok) for tok in args.primes.split(","))
    sys.stdout.write(tables.export_sn_table(args.n, primes).decode("utf-8"))
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except tables.ParseError as exc:
        print(f"parse-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotPrime, PrimeExceedsN, ValueError) as exc:
        print(f"usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (witness.CaseTreeFalsified, witness.InternalInvariantError, NotDivisible) as exc:
        print(f"internal-error: {type(exc).__name__}: {exc}")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
