"""Command-line surface: verdicts, certificates, and the self-test battery.

Exit codes: 0 success (radical / certificate produced / all suites pass),
1 definite negative verdict, 2 usage or input error, 3 indeterminate
probabilistic outcome.  ``--json`` switches to the structured schema.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import selftest
from .certify import cs_certificate, padded_witness, regular_sequence
from .fields import Field, PrimeField, QQ, field_from_tag
from .support import Support, is_radical_support, parse_support

SCHEMA_VERSION = 1

STATUS_OK = "ok"
STATUS_NOT_RADICAL = "notRadicalSupport"
STATUS_ERROR = "error"
STATUS_INDETERMINATE = "indeterminate"


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = 0


def parse_field_flag(text: str) -> Field:
    """CLI field grammar: QQ, F2, or Fp:<p>."""
    text = text.strip()
    if text == "QQ":
        return QQ
    if text == "F2":
        return PrimeField(2)
    if text.startswith("Fp:"):
        return PrimeField(int(text[3:]))
    # also accept the serialized tag form for convenience
    return field_from_tag(text)


def _read_input(args) -> str:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as handle:
            return handle.read().strip()
    if args.support is None:
        raise ValueError("provide a support (positional argument) or --file")
    return args.support


def _load_support(args) -> Support:
    return parse_support(_read_input(args))


def _emit(result: CommandResult, command: str, as_json: bool) -> int:
    if as_json:
        document = {
            "schema": f"radsup.{command}/{SCHEMA_VERSION}",
            "status": result.status,
            "payload": result.payload,
            "diagnostics": result.diagnostics,
        }
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in result.diagnostics:
            print(line)
    return result.exit_code


def _error(message: str, code: int = 2) -> CommandResult:
    return CommandResult(STATUS_ERROR, {"message": message}, [f"error: {message}"], code)


# ---------------------------------------------------------------------------
# commands

def cmd_check(args) -> CommandResult:
    support = _load_support(args)
    verdict = is_radical_support(support)
    payload = {"support": support.to_json(), **verdict.to_json()}
    if verdict.is_radical_support:
        diag = [
            f"support {support} is a radical support",
            "evidence: the label/generator incidence graph is a forest",
        ]
        return CommandResult(STATUS_OK, payload, diag, 0)
    cycle = verdict.cycle
    diag = [
        f"support {support} is NOT a radical support",
        f"cycle vertices {list(cycle.vertices)} with distinct labels {list(cycle.labels)}",
    ]
    return CommandResult(STATUS_NOT_RADICAL, payload, diag, 1)


def cmd_witness(args) -> CommandResult:
    support = _load_support(args)
    verdict = is_radical_support(support)
    if verdict.is_radical_support:
        return CommandResult(
            STATUS_ERROR,
            {"message": "no witness exists: the support is radical"},
            ["no witness exists: the support is radical"],
            1,
        )
    base_field = parse_field_flag(args.field)
    witness = padded_witness(support, verdict.cycle, base_field)
    payload = {"support": support.to_json(), "witness": witness.to_json()}
    diag = [
        f"support {support} is NOT a radical support",
        f"witness ideal in {base_field.tag} with generators:",
    ]
    diag += [f"  {g}" for g in payload["witness"]["generators"]]
    w = payload["witness"]["witness_monomial"]
    diag.append(f"witness monomial w = {w}: w is outside the ideal, w^2 is inside")
    extra = []
    for tag in args.verify_fields.split(",") if args.verify_fields else []:
        fld = parse_field_flag(tag)
        re_witness = padded_witness(support, verdict.cycle, fld)
        extra.append(re_witness.to_json()["verification"])
        diag.append(f"re-verified over {fld.tag}: ok")
    if extra:
        payload["re_verifications"] = extra
    return CommandResult(STATUS_OK, payload, diag, 0)


def cmd_regseq(args) -> CommandResult:
    support = _load_support(args)
    m = tuple(int(x) for x in args.m.split(",")) if args.m else None
    cert = regular_sequence(support, m)
    payload = {"certificate": cert.to_json()}
    diag = [f"regular sequence for {support} in blocks m = {list(cert.ring.m)}:"]
    diag += [f"  {s}" for s in payload["certificate"]["monomials"]]
    return CommandResult(STATUS_OK, payload, diag, 0)


def cmd_cs_cert(args) -> CommandResult:
    support = _load_support(args)
    verdict = is_radical_support(support)
    if not verdict.is_radical_support:
        cycle = verdict.cycle
        payload = {"support": support.to_json(), **verdict.to_json()}
        diag = [
            f"support {support} is NOT a radical support; no certificate",
            f"cycle vertices {list(cycle.vertices)} with labels {list(cycle.labels)}",
        ]
        return CommandResult(STATUS_NOT_RADICAL, payload, diag, 1)
    cert = cs_certificate(support)
    payload = {"certificate": cert.to_json()}
    diag = [
        f"support {support} is a radical (Cartwright-Sturmfels) support",
        f"product ideal has {cert.generator_count} = {cert.expected_generator_count} generators",
        f"K-polynomial identity holds: {cert.identity_holds}",
    ]
    status = STATUS_OK if cert.valid else STATUS_ERROR
    return CommandResult(status, payload, diag, 0 if cert.valid else 2)


def cmd_selftest(args) -> CommandResult:
    seed = args.seed
    diagnostics = []
    if seed is None:
        seed = random.SystemRandom().randrange(2**64)
        diagnostics.append(f"no --seed given; using seed {seed}")
    results = selftest.run_all(
        max_s=args.max_s,
        max_n=args.max_n,
        seed=seed,
        trials=args.trials,
        retries=args.retries,
    )
    payload = {
        "seed": seed,
        "suites": [
            {
                "name": r.name,
                "passed": r.passed,
                "cases": r.cases,
                "seconds": round(r.seconds, 3),
                "failures": r.failures,
                "indeterminate": r.indeterminate,
            }
            for r in results
        ],
    }
    diagnostics += [r.summary() for r in results]
    hard_failures = [r for r in results if not r.passed and not r.indeterminate]
    indeterminate = [r for r in results if not r.passed and r.indeterminate]
    if hard_failures:
        return CommandResult(STATUS_ERROR, payload, diagnostics, 1)
    if indeterminate:
        return CommandResult(STATUS_INDETERMINATE, payload, diagnostics, 3)
    return CommandResult(STATUS_OK, payload, diagnostics, 0)


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radsup",
        description="Decide whether a collection of multidegrees is a radical "
        "support and back the verdict with a checkable certificate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_support_args(p):
        p.add_argument("support", nargs="?", help='support, e.g. "1 2; 2 3; 1 3"')
        p.add_argument("--file", help="read the support from a file instead")
        p.add_argument("--json", action="store_true", help="structured output")

    p_check = sub.add_parser("check", help="radical-support verdict with evidence")
    add_support_args(p_check)
    p_check.set_defaults(handler=cmd_check)

    p_witness = sub.add_parser("witness", help="non-radical witness ideal")
    add_support_args(p_witness)
    p_witness.add_argument("--field", default="QQ", help="QQ, F2, or Fp:<p>")
    p_witness.add_argument(
        "--verify-fields",
        default="",
        help="comma-separated extra fields to re-verify over",
    )
    p_witness.set_defaults(handler=cmd_witness)

    p_regseq = sub.add_parser("regseq", help="monomial regular sequence certificate")
    add_support_args(p_regseq)
    p_regseq.add_argument("--m", default=None, help="comma-separated block sizes")
    p_regseq.set_defaults(handler=cmd_regseq)

    p_cs = sub.add_parser("cs-cert", help="Cartwright-Sturmfels certificate")
    add_support_args(p_cs)
    p_cs.set_defaults(handler=cmd_cs_cert)

    p_self = sub.add_parser("selftest", help="run the invariant suites")
    p_self.add_argument("--json", action="store_true", help="structured output")
    p_self.add_argument("--max-s", type=int, default=4, help="exhaustive bound on s")
    p_self.add_argument("--max-n", type=int, default=4, help="exhaustive bound on n")
    p_self.add_argument("--seed", type=int, default=None, help="seed for randomized suites")
    p_self.add_argument("--trials", type=int, default=20, help="randomized case scale")
    p_self.add_argument("--retries", type=int, default=3, help="coordinate-change retries")
    p_self.set_defaults(handler=cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except (ValueError, OSError) as exc:
        result = _error(str(exc))
    return _emit(result, args.command.replace("-", "_"), getattr(args, "json", False))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
