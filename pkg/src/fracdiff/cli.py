"""Command-line front-end.

Subcommands:

    apply    apply one of the eight fractional operators (or q-reflect) to a
             CSV table
    check    run registered identity checks and print a report table
    solve    step a fractional initial value problem from a JSON file
    kernel   dump a gbinom weight table

Exit codes are contract values: 0 success, 1 check failure, 2 usage/parse/
domain error, 3 window too short, 4 singular implicit step, 5 implicit solve
non-convergence. The FRACDIFF_MODE environment variable ('exact' or 'float')
overrides the default mode; identical arguments and seed give byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .grid import (
    OPERATOR_TAGS,
    GridFunction,
    WindowError,
    from_csv,
    q_reflect,
    to_csv,
)
from .identities import (
    REGISTRY,
    CheckConfig,
    check_ids,
    run_check,
    run_suite,
)
from .kernels import gbinom
from .operators import INCLUSIVE, STANDARD, apply_operator
from .scalars import (
    EXACT,
    FLOAT,
    DomainError,
    ModeError,
    format_number,
    parse_number,
    parse_rational,
)
from .solver import ConvergenceError, IVProblem, SingularStepError, residual, solve

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_WINDOW = 3
EXIT_SINGULAR = 4
EXIT_NO_CONVERGENCE = 5


def _default_mode() -> str:
    env = os.environ.get("FRACDIFF_MODE", EXACT)
    if env not in (EXACT, FLOAT):
        raise DomainError(f"FRACDIFF_MODE must be 'exact' or 'float', got {env!r}")
    return env


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="fracdiff",
        description="Discrete fractional calculus: operators, identity checks, "
        "initial value problems, kernel tables.",
    )
    top.add_argument(
        "--mode",
        choices=(EXACT, FLOAT),
        default=None,
        help="arithmetic mode (default: FRACDIFF_MODE env var, else exact)",
    )
    sub = top.add_subparsers(dest="command", required=True)

    ap = sub.add_parser("apply", help="apply an operator to a CSV table")
    ap.add_argument("operator", choices=OPERATOR_TAGS + ("q-reflect",))
    ap.add_argument("--alpha", help="operator order, e.g. 1/2 (not for q-reflect)")
    ap.add_argument("--input", required=True, help="input CSV path, '-' for stdin")
    ap.add_argument("--output", default="-", help="output CSV path, '-' for stdout")
    ap.add_argument(
        "--convention",
        choices=(STANDARD, INCLUSIVE),
        default=STANDARD,
        help="anchor convention for the nabla left sum/difference",
    )

    ck = sub.add_parser("check", help="run identity checks")
    ck.add_argument(
        "ids",
        help="comma-separated check ids, or 'all'; see --list",
        nargs="?",
        default="all",
    )
    ck.add_argument("--list", action="store_true", help="list check ids and exit")
    ck.add_argument("--alpha", default="1/2", help="comma-separated orders")
    ck.add_argument("--base", default="0", help="left endpoint a of the window")
    ck.add_argument("--window", type=int, default=12, help="window length b - a")
    ck.add_argument("--seed", type=int, default=1)
    ck.add_argument("--trials", type=int, default=10, help="random functions per check")
    ck.add_argument(
        "--convention", choices=(STANDARD, INCLUSIVE), default=INCLUSIVE,
        help="nabla left sum convention used by the dual-left checks",
    )
    ck.add_argument("--tolerance", type=float, default=1e-9)
    ck.add_argument("--json-report", help="also write the full report as JSON")

    sv = sub.add_parser("solve", help="solve an initial value problem")
    sv.add_argument("problem", help="problem JSON path, '-' for stdin")
    sv.add_argument("--output", default="-", help="trace CSV path, '-' for stdout")
    sv.add_argument("--tol", type=float, default=1e-12)
    sv.add_argument("--max-iter", type=int, default=200)
    sv.add_argument(
        "--plot-data",
        help="also write a long-format CSV (series,k,t,value) for plotting",
    )

    kn = sub.add_parser("kernel", help="dump a gbinom weight table")
    kn.add_argument("--alpha", required=True, help="kernel order")
    kn.add_argument("--count", type=int, default=10, help="number of weights")
    kn.add_argument("--output", default="-")
    return top


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_order(text: str, mode: str):
    if text is None:
        raise DomainError("--alpha is required for this operator")
    if mode == EXACT:
        return parse_rational(text)
    v = parse_number(text)
    return v if isinstance(v, float) else Fraction(v)


def cmd_apply(args, mode: str) -> int:
    f = from_csv(_read_text(args.input))
    if args.operator == "q-reflect":
        out = q_reflect(f)
        header = ["q-reflect"]
    else:
        alpha = _parse_order(args.alpha, mode)
        if mode == FLOAT and f.mode == EXACT:
            f = GridFunction(f.base, f.orientation, [float(v) for v in f.values])
        out = apply_operator(args.operator, f, alpha, args.convention)
        header = [
            f"{args.operator} alpha={format_number(alpha)}",
            f"window [{format_number(out.point(0))}.."
            f"{format_number(out.point(len(out) - 1))}]",
        ]
    _write_text(args.output, to_csv(out, comments=header))
    return EXIT_OK


def _report_table(reports) -> str:
    rows = [("check", "alpha", "mode", "window", "seed", "residual", "pass")]
    for r in reports:
        rows.append(
            (
                r.check_id,
                r.alpha,
                r.mode,
                r.window,
                str(r.seed),
                r.error if r.error else r.residual,
                "pass" if r.passed else "FAIL",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"


def cmd_check(args, mode: str) -> int:
    if args.list:
        for cid in check_ids():
            spec = REGISTRY[cid]
            sys.stdout.write(f"{cid} [{spec.order_class}]: {spec.description}\n")
        return EXIT_OK
    ids = None if args.ids == "all" else [s.strip() for s in args.ids.split(",")]
    alphas = [parse_rational(s.strip()) for s in args.alpha.split(",")]
    if ids is not None:
        # explicit requests fail loudly on an order outside the check's class
        reports = []
        for cid in ids:
            for alpha in alphas:
                cfg = CheckConfig(
                    alpha=alpha,
                    a=parse_rational(args.base),
                    window=args.window,
                    mode=mode,
                    seed=args.seed,
                    trials=args.trials,
                    convention=args.convention,
                    tolerance=args.tolerance,
                )
                reports.append(run_check(cid, cfg))
    else:
        reports = run_suite(
            alphas,
            a=parse_rational(args.base),
            window=args.window,
            mode=mode,
            seed=args.seed,
            trials=args.trials,
            convention=args.convention,
            tolerance=args.tolerance,
        )
    sys.stdout.write(_report_table(reports))
    if args.json_report:
        _write_text(
            args.json_report,
            json.dumps([r.to_dict() for r in reports], indent=2) + "\n",
        )
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_solve(args, mode: str) -> int:
    doc = json.loads(_read_text(args.problem))
    if "mode" not in doc:
        doc["mode"] = mode
    p = IVProblem.from_json(json.dumps(doc))
    trace = solve(p, tol=args.tol, max_iter=args.max_iter)
    res = residual(p, trace)
    comments = [
        f"alpha={format_number(p.alpha)} a={format_number(p.a)} "
        f"start={format_number(p.start)} mode={p.mode}",
        f"residual={format_number(res)}",
    ]
    _write_text(args.output, trace.to_csv(comments=comments))
    if args.plot_data:
        lines = ["series,k,t,value"]
        for k, v in enumerate(trace.y.values):
            lines.append(
                f"y,{k},{format_number(trace.y.point(k))},{format_number(v)}"
            )
        _write_text(args.plot_data, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_kernel(args, mode: str) -> int:
    alpha = _parse_order(args.alpha, mode)
    if args.count < 1:
        raise DomainError("--count must be >= 1")
    lines = [f"k,gbinom(alpha,k)"]
    for k in range(args.count):
        lines.append(f"{k},{format_number(gbinom(alpha, k))}")
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        mode = args.mode if args.mode else _default_mode()
        if args.command == "apply":
            return cmd_apply(args, mode)
        if args.command == "check":
            return cmd_check(args, mode)
        if args.command == "solve":
            return cmd_solve(args, mode)
        return cmd_kernel(args, mode)
    except WindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except SingularStepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (DomainError, ModeError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
