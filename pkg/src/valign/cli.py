"""Command-line front end.

Subcommands:
    lint       lint an argument file for is/ought slippage
    check      evaluate a plan against a scenario's principles
    hybrid     poll -> premise -> belief update -> principle checks
    aggregate  positional scores and winners for a ballot file
    select     pick a plan from a utility matrix

Exit codes partition every outcome:
    0   all requested checks pass, or an informational command succeeded
    2   principled failure: a principle not satisfied, a fallacy, or a
        groundless normative element
    1   operational error: unreadable or malformed input, unresolved
        references, bad usage
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .errors import EmptyBeliefBaseWarning, InputError, PlanSourceError, ValignError
from .fallacy import LintVerdict, lint_argument, load_argument
from .mimesis import apply_premise, borda_count, estimate_premise, load_ballots, load_poll
from .model import Verdict, load_scenario
from .plandsl import parse_plan
from .principles import EthicsReport, evaluate_all, load_autonomy_context
from .welfare import SelectionRule, load_utility_matrix, select_plan

_PRINCIPLE_FIELDS = {
    "gen": ("generalization",),
    "auto": ("autonomy",),
    "util": ("utilitarian",),
    "all": ("generalization", "autonomy", "utilitarian"),
}


class _Parser(argparse.ArgumentParser):
    # Usage mistakes are operational errors; argparse's default exit code 2
    # would collide with the principled-failure code.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _threshold(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"threshold must be in (0, 1], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )

    parser = _Parser(
        prog="valign",
        description="Evaluate action plans against anchored ethical principles "
        "over finite world models.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_lint = sub.add_parser(
        "lint", parents=[shared], help="lint an argument file for is/ought slippage"
    )
    p_lint.add_argument("argument", help="argument JSON file")
    p_lint.set_defaults(func=cmd_lint)

    p_check = sub.add_parser(
        "check", parents=[shared], help="check a plan against a scenario"
    )
    p_check.add_argument("plan", help="plan file (.plan)")
    p_check.add_argument("scenario", help="scenario JSON file")
    p_check.add_argument("--actor", required=True, help="agent whose plan is checked")
    p_check.add_argument(
        "--principle",
        choices=sorted(_PRINCIPLE_FIELDS),
        default="all",
        help="which principles drive the exit code (default: all)",
    )
    p_check.add_argument("--autonomy", help="autonomy context JSON file")
    p_check.add_argument(
        "--utilities",
        help="utility matrix CSV; its other rows are treated as the "
        "admissible alternatives for the utilitarian comparison",
    )
    p_check.set_defaults(func=cmd_check)

    p_hybrid = sub.add_parser(
        "hybrid",
        parents=[shared],
        help="estimate a premise from a poll, update beliefs, then check",
    )
    p_hybrid.add_argument("plan", help="plan file (.plan)")
    p_hybrid.add_argument("scenario", help="scenario JSON file")
    p_hybrid.add_argument("poll", help="poll JSON file")
    p_hybrid.add_argument("--actor", required=True, help="agent whose beliefs are updated")
    p_hybrid.add_argument(
        "--threshold",
        type=_threshold,
        default=0.5,
        help="majority fraction a poll must exceed (default: 0.5)",
    )
    p_hybrid.add_argument("--autonomy", help="autonomy context JSON file")
    p_hybrid.add_argument("--utilities", help="utility matrix CSV")
    p_hybrid.set_defaults(func=cmd_hybrid)

    p_agg = sub.add_parser(
        "aggregate", parents=[shared], help="score a ranked ballot file"
    )
    p_agg.add_argument("ballots", help="ballot CSV file (count,rank1,rank2,...)")
    p_agg.set_defaults(func=cmd_aggregate)

    p_select = sub.add_parser(
        "select", parents=[shared], help="select a plan from a utility matrix"
    )
    p_select.add_argument("utilities", help="utility matrix CSV")
    p_select.add_argument(
        "--rule",
        choices=[rule.value for rule in SelectionRule],
        default=SelectionRule.MAXIMIN_LEX.value,
        help="selection rule (default: maximin_lex)",
    )
    p_select.set_defaults(func=cmd_select)

    return parser


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_lint(args) -> int:
    result = lint_argument(load_argument(args.argument))
    payload = {"verdict": result.verdict.value, "explanation": result.explanation}
    _emit(args, payload, [f"verdict: {result.verdict.value}", result.explanation])
    return 0 if result.verdict is LintVerdict.NO_FALLACY else 2


def _read_plan(path):
    try:
        return parse_plan(Path(path).read_text(encoding="utf-8"))
    except PlanSourceError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from None


def _report_lines(report: EthicsReport) -> list[str]:
    lines = []
    for assessment in report.assessments:
        lines.append(f"plan: {assessment.plan}")
        for principle, verdict in assessment.verdicts().items():
            witness = f" [witness {verdict.witness}]" if verdict.witness else ""
            lines.append(
                f"  {principle}: {verdict.status.value}{witness} ({verdict.explanation})"
            )
        lines.append(f"  overall: {assessment.overall.value}")
    return lines


def _evaluate(args, scenario):
    plan = _read_plan(args.plan)
    ctx = load_autonomy_context(args.autonomy) if args.autonomy else None
    util = load_utility_matrix(args.utilities) if args.utilities else None
    extra = [p for p in util.plans if p != plan.name] if util else ()
    report = evaluate_all([plan], scenario, args.actor, ctx, util, extra)
    return plan, report


def cmd_check(args) -> int:
    scenario = load_scenario(args.scenario)
    _, report = _evaluate(args, scenario)
    assessment = report.assessments[0]
    payload = {
        "actor": args.actor,
        "principles": list(_PRINCIPLE_FIELDS[args.principle]),
        "report": report.to_dict(),
    }
    _emit(args, payload, _report_lines(report))
    selected = [
        getattr(assessment, field).status for field in _PRINCIPLE_FIELDS[args.principle]
    ]
    return 0 if all(status is Verdict.SATISFIES for status in selected) else 2


def cmd_hybrid(args) -> int:
    scenario = load_scenario(args.scenario)
    poll = load_poll(args.poll)
    estimate = estimate_premise(poll, args.threshold)

    before = list(scenario.beliefs_of(args.actor))
    notes: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        updated = apply_premise(scenario, args.actor, estimate, poll.proposition)
    notes = [
        str(w.message) for w in caught if issubclass(w.category, EmptyBeliefBaseWarning)
    ]
    after = list(updated.beliefs_of(args.actor))

    _, report = _evaluate(args, updated)
    assessment = report.assessments[0]
    predicate, subject = poll.proposition
    proposition = f"{predicate}({subject})"
    payload = {
        "actor": args.actor,
        "premise": {
            "proposition": proposition,
            "yes": poll.yes,
            "no": poll.no,
            "threshold": args.threshold,
            "estimate": estimate.value,
        },
        "beliefs": {"before": before, "after": after},
        "warnings": notes,
        "report": report.to_dict(),
    }
    lines = [
        f"premise {proposition}: {estimate.value} "
        f"(yes {poll.yes} / no {poll.no}, threshold {args.threshold:g})",
        f"beliefs of {args.actor}: {', '.join(before) or '(none)'} "
        f"-> {', '.join(after) or '(none)'}",
    ]
    lines.extend(f"warning: {note}" for note in notes)
    lines.extend(_report_lines(report))
    _emit(args, payload, lines)
    return 0 if assessment.overall.value == "Ethical" else 2


def cmd_aggregate(args) -> int:
    profile = load_ballots(args.ballots)
    scores, winners = borda_count(profile)
    ordered_winners = [c for c in profile.candidates if c in winners]
    top = scores[ordered_winners[0]]
    payload = {
        "candidates": list(profile.candidates),
        "scores": scores,
        "winners": ordered_winners,
    }
    lines = [f"{candidate}: {score}" for candidate, score in scores.items()]
    label = "winner" if len(ordered_winners) == 1 else "winners"
    lines.append(f"{label}: {', '.join(ordered_winners)} ({top} points)")
    _emit(args, payload, lines)
    return 0


def cmd_select(args) -> int:
    util = load_utility_matrix(args.utilities)
    rule = SelectionRule(args.rule)
    chosen = select_plan(util.plans, util, rule)
    payload = {
        "rule": rule.value,
        "plans": [
            {"plan": plan, "minimum": util.minimum(plan), "total": util.total(plan)}
            for plan in util.plans
        ],
        "selected": chosen,
    }
    lines = [
        f"{plan}: min {util.minimum(plan):g}, total {util.total(plan):g}"
        for plan in util.plans
    ]
    lines.append(f"selected: {chosen}")
    _emit(args, payload, lines)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
