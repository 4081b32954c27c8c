"""Command-line interface.

Subcommands: rank (score one problem), sweep (closeness over a
parameter grid, CSV), reproduce (run the named checks), fuzz (hunt
monotonicity violations), validate (parse and summarize a problem
file).

Exit codes: 0 success, 1 check or theorem failure, 2 input error,
3 configuration mismatch (method and weight kind, or a metric that
cannot back the requested run).

Problem arguments take a file path or the bare name of a bundled
problem; the IFTOPSIS_DATA environment variable points name lookup at
a different directory.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import (
    ConfigMismatch,
    DegenerateProblem,
    DomainError,
    IFTopsisError,
    ProblemFormatError,
    UnknownCheck,
    WeightError,
)
from .measures import AdmissibleMetric, KGammaMetric, XYMetric, ZXMetric
from .problem_io import (
    BUNDLED_PROBLEMS,
    load_problem,
    problem_from_csv,
    resolve_problem_path,
)
from .repro import (
    CHECK_IDS,
    FuzzConfig,
    fuzz_monotonicity,
    report_text,
    reports_json,
    run_all_checks,
    run_check,
)
from .topsis import (
    DecisionProblem,
    IfvWeights,
    RankingResult,
    topsis_chen,
    topsis_li,
    topsis_proposed,
)

SUCC = " ≻ "   # strict preference
TIE = " ≈ "    # closeness tie


def _preference_string(result: RankingResult, names: Sequence[str]) -> str:
    parts: list[str] = []
    for pos, idx in enumerate(result.order):
        if pos > 0:
            prev = result.order[pos - 1]
            parts.append(TIE if result.closeness[prev] == result.closeness[idx] else SUCC)
        parts.append(names[idx])
    return "".join(parts)


def _metric_from_args(args) -> AdmissibleMetric:
    if args.order == "xy":
        return XYMetric(args.lam)
    if args.order == "zx":
        return ZXMetric(args.lam)
    return KGammaMetric(args.gamma1, args.gamma2, args.lam)


def _load_input(args) -> DecisionProblem:
    path = resolve_problem_path(args.problem)
    if path.suffix.lower() == ".csv":
        if args.weights is None:
            raise ProblemFormatError(
                f"{path}: CSV input needs --weights (the matrix file carries none)"
            )
        weights = _parse_floats(args.weights, "--weights")
        kinds = args.kinds.split(",") if args.kinds else None
        return problem_from_csv(path, weights, kinds)
    if args.weights is not None or args.kinds is not None:
        raise ProblemFormatError(
            f"{path}: --weights/--kinds apply to CSV input only; "
            "problem files carry their own"
        )
    return load_problem(path)


def _parse_floats(text: str, flag: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise ProblemFormatError(f"{flag}: {exc}") from exc
    if not values:
        raise ProblemFormatError(f"{flag}: empty list")
    return values


def _run_method(problem: DecisionProblem, args) -> RankingResult:
    if args.method == "li":
        return topsis_li(problem)
    if args.method == "chen":
        return topsis_chen(problem)
    return topsis_proposed(problem, _metric_from_args(args))


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_rank(args) -> int:
    problem = _load_input(args)
    result = _run_method(problem, args)
    names = list(problem.alternatives)
    if args.format == "json":
        doc = {
            "method": args.method,
            "closeness": {n: c for n, c in zip(names, result.closeness)},
            "order": [names[i] for i in result.order],
            "ties": [[names[i] for i in group] for group in result.ties],
        }
        print(json.dumps(doc, indent=2))
    else:
        for n, c in zip(names, result.closeness):
            print(f"C({n}) = {c:.6f}")
        print(f"ranking: {_preference_string(result, names)}")
    return 0


def cmd_sweep(args) -> int:
    problem = _load_input(args)
    grid = sorted(_parse_floats(args.grid, "--grid"))
    names = list(problem.alternatives)
    rows: list[str] = ["param,value,alternative,closeness"]
    for value in grid:
        if args.param == "lambda":
            if value < 1.0:
                raise DomainError(f"--grid: lambda value {value:g} is below 1")
            largs = argparse.Namespace(
                order=args.order, lam=value, gamma1=args.gamma1, gamma2=args.gamma2
            )
            metric = _metric_from_args(largs)
        else:
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"--grid: gamma1 value {value:g} is outside [0, 1]")
            if value == args.gamma2:
                raise DomainError(
                    f"--grid: gamma1 value {value:g} equals gamma2; "
                    "the pair must differ to stay jointly injective"
                )
            metric = KGammaMetric(value, args.gamma2, args.lam)
        result = topsis_proposed(problem, metric)
        for j, name in enumerate(names):
            rows.append(f"{args.param},{value:g},{name},{result.closeness[j]:.6f}")
    text = "\n".join(rows) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_reproduce(args) -> int:
    ids = CHECK_IDS if "all" in args.checks else tuple(args.checks)
    reports = [run_check(c) for c in ids]
    if args.json:
        sys.stdout.write(reports_json(reports))
    else:
        for r in reports:
            print(report_text(r))
        failed = sum(1 for r in reports if r.status != "pass")
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return 1 if any(r.status != "pass" for r in reports) else 0


def cmd_fuzz(args) -> int:
    if args.trials <= 0:
        raise DomainError(f"--trials must be positive, got {args.trials}")
    config = FuzzConfig(
        trials=args.trials,
        seed=args.seed,
        method=args.method,
        metric=_metric_from_args(args),
    )
    report = fuzz_monotonicity(config)
    print(report_text(report))
    return 1 if report.status != "pass" else 0


def cmd_validate(args) -> int:
    problem = _load_input(args)
    kind = "IFV" if isinstance(problem.weights, IfvWeights) else "scalar"
    print(
        f"{args.problem}: ok; {problem.n_alternatives} alternatives, "
        f"{problem.n_attributes} attributes, {kind} weights"
    )
    return 0


# ---------------------------------------------------------------------------
# Parser.

def _add_metric_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--order", choices=("xy", "zx", "agg"), default="xy",
        help="linear order and metric family (default xy)",
    )
    p.add_argument(
        "--lambda", dest="lam", type=float, default=100.0,
        help="metric sharpness, at least 1 (default 100)",
    )
    p.add_argument("--gamma1", type=float, default=0.5, help="first K parameter (order=agg)")
    p.add_argument("--gamma2", type=float, default=0.8, help="second K parameter (order=agg)")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "problem",
        help=f"problem file (JSON or CSV matrix) or bundled name: {', '.join(BUNDLED_PROBLEMS)}",
    )
    p.add_argument("--weights", help="comma-separated scalar weights (CSV input only)")
    p.add_argument("--kinds", help="comma-separated benefit/cost kinds (CSV input only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iftopsis",
        description="TOPSIS ranking over intuitionistic fuzzy evaluations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank the alternatives of one problem")
    _add_input_flags(p)
    p.add_argument("--method", choices=("proposed", "li", "chen"), default="proposed")
    _add_metric_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("sweep", help="closeness over a parameter grid, as CSV")
    _add_input_flags(p)
    p.add_argument("--param", choices=("lambda", "gamma1"), required=True)
    p.add_argument("--grid", required=True, help="comma-separated grid values")
    _add_metric_flags(p)
    p.add_argument("-o", "--output", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="run the named reproduction checks")
    p.add_argument("checks", nargs="+", help='check ids, or "all"')
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("fuzz", help="hunt monotonicity violations on random problems")
    p.add_argument("--method", choices=("proposed", "li", "chen"), default="proposed")
    _add_metric_flags(p)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("validate", help="parse a problem file and report its shape")
    _add_input_flags(p)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UnknownCheck as exc:
        print(f"error: unknown check {exc.args[0]!r}", file=sys.stderr)
        return 2
    except DegenerateProblem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ProblemFormatError, WeightError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IFTopsisError as exc:  # pragma: no cover - catch-all for new errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
