"""The `verify` command line tool.

Subcommands run the exact-arithmetic check suites and print either a
human-readable listing or a canonical JSON certificate. Exit codes:
0 every check passed, 1 a mathematical check failed, 2 usage error.
Identical (command, seed) pairs produce byte-identical JSON.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import gerstenhaber, homology, model, obstruction, reports, surjection
from .reports import CheckReport, report

REFERENCE_BETTI = {2: [1, 1], 3: [1, 3, 2], 4: [1, 6, 11, 6]}


def homology_checks(arity: int) -> list[CheckReport]:
    betti = homology.poincare_polynomial(arity)
    ref = REFERENCE_BETTI.get(arity)
    if ref is None:
        return [report(
            f"homology.arity{arity}",
            f"Betti numbers of the arity-{arity} cell complex (computed only,"
            " no stored reference)",
            True, {"betti": betti, "reference": None})]
    return [report(
        f"homology.arity{arity}",
        f"Betti numbers of the arity-{arity} cell complex equal {ref}",
        betti == ref, {"betti": betti, "reference": ref})]


def model_checks() -> list[CheckReport]:
    return (gerstenhaber.verify_gerstenhaber_relations()
            + model.verify_bigraded_model())


def all_checks(max_arity: int, trials: int, seed: int) \
        -> tuple[list[CheckReport], str]:
    checks = surjection.check_operad_axioms(max_arity)
    for arity in (2, 3, 4):
        checks += homology_checks(arity)
    checks += model_checks()
    ob_checks, cert = obstruction.run_obstruction_suite(trials, seed)
    checks += ob_checks
    return checks, cert.verdict


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="machine-checked certificates for the cell-operad"
                    " formality obstruction")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="FILE",
                       help="write the output to FILE on success")

    p_ax = sub.add_parser("axioms", help="planar operad axiom suite")
    p_ax.add_argument("--max-arity", type=int, choices=range(2, 6), default=4,
                      metavar="N", help="largest composite arity (2..5)")
    common(p_ax)

    p_h = sub.add_parser("homology", help="Betti numbers of one arity")
    p_h.add_argument("arity", type=int, choices=range(2, 6), metavar="ARITY",
                     help="arity of the cell complex (2..5)")
    common(p_h)

    p_m = sub.add_parser("model", help="bigraded model rank suite")
    common(p_m)

    p_o = sub.add_parser("obstruction", help="formality obstruction verdict")
    p_o.add_argument("--trials", type=int, default=20, metavar="N",
                     help="random lift redraws (default 20)")
    p_o.add_argument("--seed", type=int, default=1, metavar="N")
    common(p_o)

    p_all = sub.add_parser("all", help="every suite in order")
    p_all.add_argument("--max-arity", type=int, choices=range(2, 6), default=4,
                       metavar="N")
    p_all.add_argument("--trials", type=int, default=20, metavar="N")
    p_all.add_argument("--seed", type=int, default=1, metavar="N")
    common(p_all)

    p_rep = sub.add_parser(
        "report", help="full suite plus CSV table and rendered figures")
    p_rep.add_argument("--out-dir", metavar="DIR", default="verify-report",
                       help="directory for checks.csv, certificate.json and"
                            " figures (default verify-report)")
    p_rep.add_argument("--max-arity", type=int, choices=range(2, 6), default=4,
                       metavar="N")
    p_rep.add_argument("--trials", type=int, default=20, metavar="N")
    p_rep.add_argument("--seed", type=int, default=1, metavar="N")
    return parser


def _emit(args: argparse.Namespace, checks: list[CheckReport],
          verdict: str | None) -> int:
    seed = getattr(args, "seed", 1)
    if args.format == "json":
        doc = reports.certificate(args.command, seed, checks, verdict)
        output = reports.dumps_canonical(doc)
    else:
        output = reports.render_text(checks, verdict)
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(output)
        print(f"wrote {out}")
    else:
        sys.stdout.write(output)
    return 0 if all(c.passed for c in checks) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "axioms":
            checks = surjection.check_operad_axioms(args.max_arity)
            return _emit(args, checks, None)
        if args.command == "homology":
            return _emit(args, homology_checks(args.arity), None)
        if args.command == "model":
            return _emit(args, model_checks(), None)
        if args.command == "obstruction":
            checks, cert = obstruction.run_obstruction_suite(args.trials,
                                                             args.seed)
            return _emit(args, checks, cert.verdict)
        if args.command == "all":
            checks, verdict = all_checks(args.max_arity, args.trials,
                                         args.seed)
            return _emit(args, checks, verdict)
        if args.command == "report":
            from . import figures
            checks, verdict = all_checks(args.max_arity, args.trials,
                                         args.seed)
            doc = reports.certificate("report", args.seed, checks, verdict)
            written = figures.write_report(Path(args.out_dir), checks, doc)
            sys.stdout.write(reports.render_text(checks, verdict))
            for path in written:
                print(f"wrote {path}")
            return 0 if all(c.passed for c in checks) else 1
    except KeyboardInterrupt:
        print("interrupted; no certificate written", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
