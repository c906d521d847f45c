"""Command line front end.

Exit status 0 on success, 1 when the problem fails validation, 2 on
usage errors (bad flags, unreadable files, unknown alternative).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from importlib import resources
from typing import Sequence, TextIO

from .dominance import RANKINGS
from .fuzzy_numbers import TNORMS
from .measures import ValidationError
from .owa import importance_weights, parse_quantifier, quantifier_weights
from .pipeline import AlternativeScore, DecisionProblem, RankingReport, rank_alternatives, score_alternative
from .specfile import normalize_ranking, parse_spec

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXAMPLE_SPEC = "worked-example.spec"


class UsageError(Exception):
    pass


def example_text() -> str:
    return resources.files("owafuzzy").joinpath("data", EXAMPLE_SPEC).read_text(encoding="utf-8")


def example_path() -> str:
    return str(resources.files("owafuzzy").joinpath("data", EXAMPLE_SPEC))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="owafuzzy",
        description="Rank alternatives from uncertain fuzzy criterion satisfactions with OWA aggregation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def problem_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("spec", help="problem spec (JSON); '-' reads stdin")
        p.add_argument(
            "--ranking",
            choices=["centroid", "lattice-ini", "lattice_ini"],
            help="fuzzy ranking used when dominance is incomplete (overrides the spec)",
        )
        p.add_argument("--grid", type=int, help="grid points for lattice operations")
        p.add_argument("--tnorm", choices=TNORMS, help="t-norm for the inclusion index")
        p.add_argument("--format", choices=["text", "json"], default="text")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--strict", dest="strict", action="store_true", default=True,
                          help="unknown spec fields are errors (default)")
        mode.add_argument("--lenient", dest="strict", action="store_false",
                          help="unknown spec fields are warnings")

    rank = sub.add_parser("rank", help="rank every alternative")
    problem_flags(rank)

    score = sub.add_parser("score", help="score one alternative with its full trace")
    problem_flags(score)
    score.add_argument("--alternative", required=True)

    weights = sub.add_parser("weights", help="print OWA weights generated by a quantifier")
    weights.add_argument("--quantifier", required=True, help="power:<alpha> or knots:z,q;z,q;...")
    weights.add_argument("--n", type=int, required=True, help="number of arguments")
    weights.add_argument("--importances", help="comma separated importances in rank order")
    weights.add_argument("--format", choices=["text", "json"], default="text")

    sub.add_parser("example", help="print the bundled worked example spec")
    return parser


def _load(args: argparse.Namespace, err: TextIO) -> DecisionProblem:
    if args.spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.spec}: {exc.strerror}") from None
    problem, warnings = parse_spec(text, strict=args.strict)
    for w in warnings:
        print(f"warning: {w}", file=err)
    overrides = {}
    if args.ranking:
        overrides["ranking"] = normalize_ranking(args.ranking)
    if args.grid is not None:
        overrides["grid"] = args.grid
    if args.tnorm:
        overrides["tnorm"] = args.tnorm
    if overrides:
        problem = replace(problem, **overrides)
        problem.check()
    return problem


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "example":
            out.write(example_text())
        elif args.command == "weights":
            _weights(args, out)
        elif args.command == "rank":
            report = rank_alternatives(_load(args, err))
            _emit(args.format, report.to_dict(), lambda: format_report(report, _styler(out)), out)
        elif args.command == "score":
            problem = _load(args, err)
            if args.alternative not in problem.alternatives:
                raise UsageError(
                    f"unknown alternative {args.alternative!r}; known: {', '.join(sorted(problem.alternatives))}"
                )
            result = score_alternative(problem, args.alternative)
            _emit(args.format, result.to_dict(), lambda: format_score(result, problem, _styler(out)), out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ValidationError as exc:
        for diag in exc.diagnostics:
            print(f"error: {diag}", file=err)
        return EXIT_INVALID
    return EXIT_OK


def _weights(args: argparse.Namespace, out: TextIO) -> None:
    try:
        q = parse_quantifier(args.quantifier)
        if args.importances:
            lambdas = [float(v) for v in args.importances.split(",")]
            if len(lambdas) != args.n:
                raise UsageError(f"{len(lambdas)} importances for --n {args.n}")
            w = importance_weights(q, lambdas)
        else:
            w = quantifier_weights(q, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps({"quantifier": q.describe(), "weights": list(w)}) + "\n")
    else:
        out.write(" ".join(_g(v) for v in w) + "\n")


def _emit(fmt: str, machine: dict, text, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(machine, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text())


def _styler(out: TextIO):
    use_color = "NO_COLOR" not in os.environ and hasattr(out, "isatty") and out.isatty()
    if use_color:
        return lambda s: f"\033[1m{s}\033[0m"
    return lambda s: s


def _g(value: float) -> str:
    return f"{value:.6g}"


def _row(label: str, values, width: int) -> str:
    return f"    {label:<{width}}" + "".join(f"{_g(v):>10}" for v in values)


def format_score(score: AlternativeScore, problem: DecisionProblem, bold=lambda s: s) -> str:
    labels = problem.scale.labels
    width = max(len(c) for c in (*score.criteria, "aggregate")) + 2
    header = "    " + " " * width + "".join(f"{lab[:9]:>10}" for lab in labels)
    ordering = score.criterion_ordering
    lines = [
        bold(f"Alternative {score.name}"),
        f"  criterion order: {' > '.join(score.ordered_criteria)} ({ordering.method})",
        "  weights: " + " ".join(_g(w) for w in score.weights),
        "  cumulative mu(H_j):",
        header,
        *(_row(c, row, width) for c, row in zip(score.criteria, score.cumulative_rows)),
        "  increments V_j = mu(H_j) - mu(H_j-1):",
        header,
        *(_row(c, row, width) for c, row in zip(score.criteria, score.delta_rows)),
    ]
    lines.append("  criterion surrogates M(mu_k) and centroids:")
    for c, s in zip(score.criteria, score.criterion_surrogates):
        x0 = (s.a + s.b + s.c) / 3.0
        lines.append(f"    {c:<{width}}({_g(s.a)}, {_g(s.b)}, {_g(s.c)})  x0={_g(x0)}")
    lines += [
        "  aggregate mu_x(H_j):",
        header,
        _row("aggregate", score.aggregate.values, width),
        f"  surrogate M(mu_x) = ({_g(score.surrogate.a)}, {_g(score.surrogate.b)}, {_g(score.surrogate.c)})"
        f"  centroid {_g(score.centroid)}",
    ]
    return "\n".join(lines) + "\n"


def format_report(report: RankingReport, bold=lambda s: s) -> str:
    lines = [bold(f"Ranking (comparison: {report.comparison_method}, fuzzy ranking: {report.ranking_strategy})")]
    width = max(len(s.name) for s in report.ranking)
    for pos, s in enumerate(report.ranking, start=1):
        m = s.surrogate
        lines.append(
            f"  {pos:>2}. {s.name:<{width}}  centroid {_g(s.centroid):>9}  "
            f"M = ({_g(m.a)}, {_g(m.b)}, {_g(m.c)})  criteria: {' > '.join(s.ordered_criteria)}"
            f" ({s.criterion_ordering.method})"
        )
    lines.append("")
    lines.append(bold("Aggregates mu_x(H_j)"))
    labels = report.scale_labels
    lines.append("    " + " " * (width + 2) + "".join(f"{lab[:9]:>10}" for lab in labels))
    for s in report.ranking:
        lines.append(_row(s.name, s.aggregate.values, width + 2))
    if report.warnings:
        lines.append("")
        lines.append(bold("Warnings"))
        lines.extend(f"  - {w}" for w in report.warnings)
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    raise SystemExit(main())
