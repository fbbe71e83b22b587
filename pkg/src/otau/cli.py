"""``verify <suite>``: run verification suites and write a report.

Exit codes: 0 when every case passes (``discrepancy`` is tolerated in
informational suites), 1 when any case fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .core.exact import ParameterError
from .core.params import TauParams
from .suites import FAIL, INFORMATIONAL, PASS, SUITES, SuiteConfig, run_suites

# desk-scale limits; larger grids are exact but slow
LIMITS = {"kmax": 60, "nmax": 30, "lmax": 12}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verify",
                                     description="Exact verification suites for the tau-deformed quiver toolkit.")
    parser.add_argument("suite", choices=sorted(SUITES) + ["all"])
    parser.add_argument("--kmax", type=int)
    parser.add_argument("--nmax", type=int)
    parser.add_argument("--lmax", type=int)
    parser.add_argument("--tau0", type=_rational)
    parser.add_argument("--tau1", type=_rational)
    parser.add_argument("--symbolic-z", action="store_true",
                        help="tau = (1 - z, z) with z an indeterminate (the default)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=["json", "markdown"], default="json")
    return parser


def config_from_args(args) -> SuiteConfig:
    numeric = args.tau0 is not None or args.tau1 is not None
    if numeric and args.symbolic_z:
        raise UsageError("--symbolic-z cannot be combined with --tau0/--tau1")
    if numeric:
        if args.tau0 is None or args.tau1 is None:
            raise UsageError("--tau0 and --tau1 must be given together")
        try:
            params = TauParams.numeric(args.tau0, args.tau1)
        except ParameterError as exc:
            raise UsageError(str(exc))
    else:
        params = TauParams.symbolic_z()
    for name, limit in LIMITS.items():
        val = getattr(args, name)
        if val is not None and not 1 <= val <= limit:
            raise UsageError(f"--{name} must lie in 1..{limit}")
    suites = sorted(SUITES) if args.suite == "all" else [args.suite]
    return SuiteConfig(suites, params, args.kmax, args.nmax, args.lmax, args.seed,
                       args.out, args.format)


def build_report(cfg: SuiteConfig, records) -> dict:
    counts = Counter(r.status for r in records)
    return {"tool": "otau", "version": __version__, "config": cfg.to_json(),
            "summary": {k: counts[k] for k in sorted(counts)},
            "cases": [r.to_json() for r in records]}


def exit_code(records) -> int:
    for r in records:
        if r.status == FAIL:
            return 1
        if r.status not in (PASS, "skipped") and r.suite not in INFORMATIONAL:
            return 1
    return 0


def render_markdown(report: dict) -> str:
    lines = [f"# otau {report['version']} verification report", ""]
    cfg = report["config"]
    lines.append(f"suites: {', '.join(cfg['suites'])}; mode: {cfg['mode']}; seed: {cfg['seed']}")
    lines += ["", "| suite | pass | fail | skipped | discrepancy |", "|---|---|---|---|---|"]
    per = {}
    for case in report["cases"]:
        per.setdefault(case["suite"], Counter())[case["status"]] += 1
    for suite in sorted(per):
        c = per[suite]
        lines.append(f"| {suite} | {c['pass']} | {c['fail']} | {c['skipped']} | {c['discrepancy']} |")
    others = [c for c in report["cases"] if c["status"] != PASS]
    if others:
        lines += ["", "## Non-passing cases", ""]
        for case in others:
            lines.append(f"- `{case['case-id']}`: {case['status']}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "verify":
        argv = argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        print(f"verify: error: {exc}", file=sys.stderr)
        return 2
    records = run_suites(cfg)
    report = build_report(cfg, records)
    text = (render_markdown(report) if cfg.fmt == "markdown"
            else json.dumps(report, indent=1, sort_keys=True) + "\n")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
