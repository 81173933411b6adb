"""Command-line front end: classify, decompose, census, verify, audit.

Exit codes: 0 success or admissible, 1 semantic negative (not a Sylow
number, failed verification, audit violation), 2 usage or domain error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import sys

from .catalog import CatalogError, load_catalog, verify_catalog
from .classifier import (
    DecompositionKind,
    admissible_sylow_numbers,
    census,
    decompose,
    p_solvability_verdict,
)
from .families import proof_inequality_audit
from .numtheory import DomainError

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class ReportFormat(enum.Enum):
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"


class _Parser(argparse.ArgumentParser):
    # argparse already exits with 2 on usage errors; keep that, but route through one place
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _witness_text(av) -> str:
    return "; ".join(f"{w.kind}: {w.params_text()}" for w in av.witnesses)


def render_classify(p: int) -> str:
    values = admissible_sylow_numbers(p)
    width = len(str(values[-1].value))
    lines = [f"admissible n_{p} below {p * p}:"]
    for av in values:
        lines.append(f"{av.value:>{width}}  r={av.r_coefficient}  {_witness_text(av)}")
    return "\n".join(lines) + "\n"


def render_decompose(n: int, p: int) -> tuple[str, int]:
    d = decompose(n, p)
    lines = [f"n = {n} = 1 + {(n - 1) // p}*{p}", f"kind: {d.kind.value}"]
    if d.kind is DecompositionKind.PRIME_POWER:
        lines.append(f"prime power: {d.prime_power.base}^{d.prime_power.exponent}")
        lines.append(f"realized by: Frobenius group frobenius_affine{d.frobenius}")
    for w in d.simple:
        lines.append(f"simple group: {w.family}")
    lines.append(f"reason: {d.reason}")
    if not d.admissible:
        return "\n".join(lines) + "\n", EXIT_NEGATIVE
    v = p_solvability_verdict(n, p)
    lines.append(f"p-solvability: {v.verdict.value} ({v.reason})")
    return "\n".join(lines) + "\n", EXIT_OK


def census_records(p_max: int) -> dict:
    return {
        "primes": [
            {
                "p": row.p,
                "values": [
                    {"n": av.value, "r": av.r_coefficient, "witnesses": [w.to_dict() for w in av.witnesses]}
                    for av in row.values
                ],
            }
            for row in census(p_max)
        ]
    }


def render_census(p_max: int, fmt: ReportFormat) -> str:
    rows = census(p_max)
    if fmt is ReportFormat.JSON:
        return json.dumps(census_records(p_max), indent=2) + "\n"
    if fmt is ReportFormat.CSV:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "n", "r", "witness_kind", "witness_params"])
        for row in rows:
            for av in row.values:
                for wit in av.witnesses:
                    w.writerow([row.p, av.value, av.r_coefficient, wit.kind, wit.params_text()])
        return buf.getvalue()
    lines = ["| p | n | r | witnesses |", "|---|---|---|---|"]
    for row in rows:
        for av in row.values:
            lines.append(f"| {row.p} | {av.value} | {av.r_coefficient} | {_witness_text(av)} |")
    return "\n".join(lines) + "\n"


def render_verify(results) -> tuple[str, int]:
    lines = []
    for r in results:
        head = f"{r.status:<8}{r.name}"
        if r.note:
            head += f"  ({r.note})"
        elif r.status == "PASS":
            head += f"  ({len(r.checks)} checks)"
        lines.append(head)
        for c in r.failures():
            lines.append(f"  - expected {c.label} = {c.expected}")
            lines.append(f"  + computed {c.label} = {c.actual}")
    counts = {s: sum(1 for r in results if r.status == s) for s in ("PASS", "FAIL", "SKIPPED")}
    lines.append(f"passed: {counts['PASS']}  failed: {counts['FAIL']}  skipped: {counts['SKIPPED']}")
    return "\n".join(lines) + "\n", EXIT_NEGATIVE if counts["FAIL"] else EXIT_OK


def render_audit(q_max: int, e_max: int) -> tuple[str, int]:
    report = proof_inequality_audit(q_max, e_max)
    lines = [f"inequality audit: q <= {q_max}, e <= {e_max}"]
    for c in report.chains:
        lines.append(f"[{c.tag}] {c.name}: {c.points} points, {len(c.violations)} violations")
    for v in report.violations:
        lines.append(f"VIOLATION {v}")
    lines.append(
        f"chains: {len(report.chains)}  points: {report.points}  violations: {len(report.violations)}"
    )
    return "\n".join(lines) + "\n", EXIT_OK if report.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="sylownum", description="Sylow numbers below p^2.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="list every admissible n_p below p^2")
    c.add_argument("p", type=int)

    d = sub.add_parser("decompose", help="explain whether n can be a Sylow p-number")
    d.add_argument("n", type=int)
    d.add_argument("p", type=int)

    cs = sub.add_parser("census", help="admissible values for all primes up to --max")
    cs.add_argument("--max", dest="p_max", type=int, required=True)
    cs.add_argument("--format", choices=[f.value for f in ReportFormat], default="json")
    cs.add_argument("--out", help="write to this file instead of stdout")

    v = sub.add_parser("verify", help="brute-force check of the group catalog")
    v.add_argument("--catalog", help="catalog JSON (default: the shipped catalog)")
    v.add_argument("--deep", action="store_true", help="include the larger entries")

    a = sub.add_parser("audit", help="evaluate the registered inequality chains")
    a.add_argument("--qmax", type=int, default=32)
    a.add_argument("--emax", type=int, default=36)
    return ap


def _emit(text: str, out: str | None = None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)


def run(args) -> int:
    if args.command == "classify":
        _emit(render_classify(args.p))
        return EXIT_OK
    if args.command == "decompose":
        text, code = render_decompose(args.n, args.p)
        _emit(text)
        return code
    if args.command == "census":
        if args.p_max < 2:
            raise DomainError("census needs --max >= 2")
        _emit(render_census(args.p_max, ReportFormat(args.format)), args.out)
        return EXIT_OK
    if args.command == "verify":
        text, code = render_verify(verify_catalog(load_catalog(args.catalog), deep=args.deep))
        _emit(text)
        return code
    if args.command == "audit":
        text, code = render_audit(args.qmax, args.emax)
        _emit(text)
        return code
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (DomainError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
