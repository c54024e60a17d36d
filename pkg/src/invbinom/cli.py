"""Command-line front end: list, show and verify catalog identities.

    invbinom list [--format text|json|csv]
    invbinom show ID
    invbinom verify --id ID [--digits D] [--format F] [--max-terms N]
    invbinom verify-all [--digits D] [--format F] [--max-terms N] [--jobs N]

Every subcommand accepts ``--catalog PATH``; ``INVBINOM_CATALOG`` supplies a
default.  Exit status: 0 all passed, 1 some verification failed or was
skipped, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .closedform import to_text
from .errors import InvBinomError, UnknownIdError
from .registry import builtin_catalog, get_identity, load_catalog
from .series import DEFAULT_MAX_TERMS
from .verifier import result_record, verify, verify_all

CATALOG_ENV = "INVBINOM_CATALOG"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_FIELDS = ["id", "status", "digits_requested", "abs_diff", "lhs_re", "lhs_im",
              "rhs_re", "rhs_im", "terms_used", "method", "elapsed", "notes"]
LIST_FIELDS = ["id", "ref", "class", "default_digits", "tags"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    id: str | None = None
    digits: int | None = None
    format: str = "text"
    catalog_path: str | None = None
    max_terms: int = DEFAULT_MAX_TERMS
    jobs: int | None = None


def _int_at_least(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}, got {v}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", dest="catalog_path", metavar="PATH",
                        help=f"catalog file (default: ${CATALOG_ENV} or the built-in catalog)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--digits", type=_int_at_least(6), metavar="D",
                     help="decimal digits to certify (default: per entry)")
    run.add_argument("--max-terms", type=_int_at_least(1), default=DEFAULT_MAX_TERMS, metavar="N")

    parser = argparse.ArgumentParser(prog="invbinom",
                                     description="Verify inverse-binomial series identities.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", parents=[common], help="list catalog entries")
    show = sub.add_parser("show", parents=[common], help="show one entry")
    show.add_argument("id")
    one = sub.add_parser("verify", parents=[common, run], help="verify one entry")
    one.add_argument("--id", required=True)
    every = sub.add_parser("verify-all", parents=[common, run], help="verify every entry")
    every.add_argument("--jobs", type=_int_at_least(1), metavar="N",
                       help="worker processes (default: available CPUs)")
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        id=getattr(ns, "id", None),
        digits=getattr(ns, "digits", None),
        format=ns.format,
        catalog_path=ns.catalog_path or os.environ.get(CATALOG_ENV) or None,
        max_terms=getattr(ns, "max_terms", DEFAULT_MAX_TERMS),
        jobs=getattr(ns, "jobs", None),
    )


def _entry_record(e) -> dict:
    return {
        "id": e.id,
        "ref": e.ref,
        "family": e.lhs.family.value,
        "weight": e.lhs.weight,
        "shift": e.lhs.shift,
        "sign": e.lhs.sign,
        "start": e.lhs.start,
        "point": to_text(e.lhs.point),
        "scale": to_text(e.lhs.scale),
        "offset": str(e.lhs_offset),
        "rhs": to_text(e.rhs),
        "class": e.convergence_class.value,
        "default_digits": e.default_digits,
        "tags": list(e.tags),
    }


def _csv_row(rec: dict) -> dict:
    row = {k: rec[k] for k in ("id", "status", "digits_requested", "abs_diff",
                              "terms_used", "method", "elapsed")}
    for side in ("lhs", "rhs"):
        v = rec[f"{side}_value"]
        row[f"{side}_re"] = v["re"] if v else ""
        row[f"{side}_im"] = v["im"] if v else ""
    row["notes"] = "; ".join(rec["notes"])
    return row


def _emit_results(results, fmt, out):
    records = [result_record(r) for r in results]
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for rec in records:
            w.writerow(_csv_row(rec))
    else:
        for r, rec in zip(results, records):
            diff = rec["abs_diff"] or "-"
            out.write(f"{r.status.upper():7s} {r.id:24s} D={r.digits_requested:<3d} "
                      f"diff={diff:>10s} {r.method:22s} terms={r.terms_used:<6d} "
                      f"{r.elapsed:7.3f}s\n")
            if not r.passed:
                for note in r.notes:
                    out.write(f"        {note}\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} passed\n")


def _emit_entries(entries, fmt, out):
    records = [_entry_record(e) for e in entries]
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=LIST_FIELDS, lineterminator="\n")
        w.writeheader()
        for rec in records:
            w.writerow({"id": rec["id"], "ref": rec["ref"], "class": rec["class"],
                        "default_digits": rec["default_digits"], "tags": ",".join(rec["tags"])})
    else:
        for rec in records:
            out.write(f"{rec['id']:24s} {rec['class']:15s} {rec['default_digits']:3d}  {rec['ref']}\n")


def _emit_entry(e, fmt, out):
    if fmt != "text":
        _emit_entries([e], fmt, out)
        return
    for key, value in _entry_record(e).items():
        if isinstance(value, list):
            value = ", ".join(value)
        out.write(f"{key:15s} {value}\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        catalog = load_catalog(cfg.catalog_path) if cfg.catalog_path else builtin_catalog()
    except (OSError, InvBinomError) as exc:
        err.write(f"invbinom: cannot load catalog: {exc}\n")
        return EXIT_USAGE
    for lineno, ident, reason in catalog.rejected:
        err.write(f"invbinom: line {lineno}: entry {ident} rejected: {reason}\n")
    try:
        if cfg.command == "list":
            _emit_entries(list(catalog), cfg.format, out)
            return EXIT_OK
        if cfg.command == "show":
            _emit_entry(get_identity(catalog, cfg.id), cfg.format, out)
            return EXIT_OK
        if cfg.command == "verify":
            results = [verify(get_identity(catalog, cfg.id), cfg.digits, max_terms=cfg.max_terms)]
        else:
            results = verify_all(catalog, cfg.digits, jobs=cfg.jobs, max_terms=cfg.max_terms)
    except UnknownIdError as exc:
        err.write(f"invbinom: {exc}\n")
        return EXIT_USAGE
    except InvBinomError as exc:
        err.write(f"invbinom: {exc}\n")
        return EXIT_USAGE
    _emit_results(results, cfg.format, out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def main() -> None:
    sys.exit(run())
