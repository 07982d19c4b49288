"""Command-line front end.

Subcommands: represent (one certificate), verify-range (the five named
forms over a range), survey (catalog scan), count, witnesses, and
negative-control.  Output is human text by default; --json and --csv emit
machine formats that are byte-identical across runs and worker counts, so
wall_ms is reported as 0 there (human output shows the measured value).

Exit codes: 0 success, 1 a mathematical counterexample was found, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .forms import FORM_NAMES, MixedForm, represent, verify
from .oracle import FormSpec, count, form_spec_of, parse_form_spec, witnesses
from .survey import (
    SOURCES,
    ControlMismatchError,
    RangeReport,
    negative_control,
    verify_catalog,
    verify_theorem2_range,
)


def _parse_form_name(token: str) -> MixedForm:
    try:
        return MixedForm(token)
    except ValueError:
        raise ValueError(f"unknown form {token!r}, expected one of {', '.join(FORM_NAMES)}")


def _parse_any_form(token: str) -> FormSpec:
    """Accept a named form spelling or a '<coeff>*sq+...' term list."""
    try:
        return form_spec_of(MixedForm(token))
    except ValueError:
        pass
    return parse_form_spec(token)


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_const", const="json", dest="fmt")
    g.add_argument("--csv", action="store_const", const="csv", dest="fmt")
    g.add_argument("--human", action="store_const", const="human", dest="fmt")
    p.set_defaults(fmt="human")


def _add_jobs_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedsums",
        description="mixed square/triangular representations: certificates, oracle, surveys",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("represent", help="decompose one number under one named form")
    p.add_argument("form", help="one of " + ", ".join(FORM_NAMES))
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true", help="re-check the certificate arithmetic")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_represent)

    p = sub.add_parser("verify-range", help="check the five named forms over a range")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--mode", choices=("constructive", "oracle"), default="constructive")
    p.add_argument("--forms", metavar="LIST", help="comma-separated form names (default all)")
    _add_jobs_flag(p)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_verify_range)

    p = sub.add_parser("survey", help="oracle-scan the form catalogs over a range")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--source", choices=SOURCES, help="restrict to one catalog group")
    _add_jobs_flag(p)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_survey)

    p = sub.add_parser("count", help="count integer witnesses of n under a form")
    p.add_argument("spec", help="form name or term list like 1*sq+3*sq+1*tri")
    p.add_argument("n", type=int)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("witnesses", help="list witnesses of n in lexicographic order")
    p.add_argument("spec", help="form name or term list like 1*sq+3*sq+1*tri")
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=10, metavar="N", help="witness cap (default 10)")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_witnesses)

    p = sub.add_parser(
        "negative-control",
        help="scan plain three squares; exits 1 on the expected exclusions",
    )
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    _add_jobs_flag(p)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_negative_control)

    return parser


# ── represent ──────────────────────────────────────────────────────────────

_WITNESS_TEMPLATES = {
    MixedForm.X2_3Y2_T: "({x})^2 + 3*({y})^2 + T({z})",
    MixedForm.X2_3T_T: "({x})^2 + 3*T({y}) + T({z})",
    MixedForm.X2_6T_T: "({x})^2 + 6*T({y}) + T({z})",
    MixedForm.THREE_X2_2T_T: "3*({x})^2 + 2*T({y}) + T({z})",
    MixedForm.FOUR_X2_2T_T: "4*({x})^2 + 2*T({y}) + T({z})",
}


def _cmd_represent(args: argparse.Namespace) -> int:
    form = _parse_form_name(args.form)
    cert = represent(form, args.n)
    if args.verify and not verify(cert):
        print(f"error: certificate for {form.value} n={args.n} failed re-verification",
              file=sys.stderr)
        return 1
    if args.fmt == "json":
        print(cert.to_json())
    elif args.fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["form", "n", "x", "y", "z"])
        w.writerow([cert.form.value, cert.n, cert.x, cert.y, cert.z])
    else:
        body = _WITNESS_TEMPLATES[form].format(x=cert.x, y=cert.y, z=cert.z)
        print(f"{form.value}: {cert.n} = {body}")
    return 0


# ── range reports (verify-range, survey, negative-control) ────────────────


def _report_dict(r: RangeReport, wall_ms: int) -> dict:
    return {
        "entry": r.entry.entry_id,
        "status": r.entry.status,
        "lo": r.lo,
        "hi": r.hi,
        "verified": r.verified_count,
        "counterexamples": list(r.counterexamples),
        "mode": r.mode,
        "wall_ms": wall_ms,
    }


def _emit_reports(reports: Sequence[RangeReport], fmt: str) -> int:
    if fmt == "json":
        # wall time zeroed: machine output is byte-reproducible
        print(json.dumps([_report_dict(r, 0) for r in reports], separators=(",", ":")))
    elif fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["entry", "lo", "hi", "verified", "counterexamples", "mode", "wall_ms"])
        for r in reports:
            w.writerow(
                [
                    r.entry.entry_id,
                    r.lo,
                    r.hi,
                    r.verified_count,
                    ";".join(str(n) for n in r.counterexamples),
                    r.mode,
                    0,
                ]
            )
    else:
        for r in reports:
            bad = ";".join(str(n) for n in r.counterexamples) or "none"
            print(
                f"{r.entry.entry_id} [{r.lo}, {r.hi}] mode={r.mode}"
                f" status={r.entry.status} verified={r.verified_count}"
                f" counterexamples={bad} wall={r.wall_ms}ms"
            )
    failed = False
    for r in reports:
        if r.counterexamples:
            failed = True
            print(
                f"counterexample: {r.entry.entry_id} fails at n={r.counterexamples[0]}",
                file=sys.stderr,
            )
    return 1 if failed else 0


def _cmd_verify_range(args: argparse.Namespace) -> int:
    forms = None
    if args.forms:
        forms = [_parse_form_name(tok) for tok in args.forms.split(",") if tok]
        if not forms:
            raise ValueError("--forms given but no form names parsed")
    reports = verify_theorem2_range(args.lo, args.hi, args.mode, forms, args.jobs)
    return _emit_reports(reports, args.fmt)


def _cmd_survey(args: argparse.Namespace) -> int:
    reports = verify_catalog(args.source, args.lo, args.hi, args.jobs)
    return _emit_reports(reports, args.fmt)


def _cmd_negative_control(args: argparse.Namespace) -> int:
    report = negative_control(args.lo, args.hi, args.jobs)
    return _emit_reports([report], args.fmt)


# ── count / witnesses ──────────────────────────────────────────────────────


def _cmd_count(args: argparse.Namespace) -> int:
    spec = _parse_any_form(args.spec)
    c = count(spec, args.n)
    if args.fmt == "json":
        print(json.dumps({"form": str(spec), "n": args.n, "count": c}, separators=(",", ":")))
    elif args.fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["form", "n", "count"])
        w.writerow([str(spec), args.n, c])
    else:
        print(c)
    return 0


def _cmd_witnesses(args: argparse.Namespace) -> int:
    spec = _parse_any_form(args.spec)
    wl = witnesses(spec, args.n, args.limit)
    if args.fmt == "json":
        print(
            json.dumps(
                {
                    "form": str(spec),
                    "n": wl.n,
                    "limit": wl.limit,
                    "witnesses": [list(t) for t in wl.items],
                    "truncated": wl.truncated,
                },
                separators=(",", ":"),
            )
        )
    elif args.fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["form", "n", "x", "y", "z"])
        for x, y, z in wl.items:
            w.writerow([str(spec), wl.n, x, y, z])
    else:
        for x, y, z in wl.items:
            print(f"({x}, {y}, {z})")
        if wl.truncated:
            print(f"... truncated at {wl.limit}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ControlMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as e:
        # covers unknown forms, parse failures, bad bounds and width errors
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
