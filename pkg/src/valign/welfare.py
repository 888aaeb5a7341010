"""Plan selection combining utility maximization with maximin fairness.

The default rule is lexicographic: first maximize the worst-off agent's
utility, then break ties by total utility, then by earliest position in
the input order. ``utility_only`` drops the fairness level and goes
straight to totals with the same positional tie-break.
"""

from __future__ import annotations

import csv
from enum import Enum
from typing import Sequence

from .errors import InputError
from .principles import UtilityMatrix


class SelectionRule(Enum):
    MAXIMIN_LEX = "maximin_lex"
    UTILITY_ONLY = "utility_only"


def select_plan(
    plans: Sequence[str],
    util: UtilityMatrix,
    rule: SelectionRule = SelectionRule.MAXIMIN_LEX,
) -> str:
    """Pick one plan deterministically under the given rule."""
    plans = list(plans)
    if not plans:
        raise InputError("empty plan list")
    for plan in plans:
        if plan not in util.plans:
            raise InputError(f"utility matrix has no plan {plan!r}")

    def key(plan: str) -> tuple:
        if rule is SelectionRule.MAXIMIN_LEX:
            return (util.minimum(plan), util.total(plan))
        return (util.total(plan),)

    best = plans[0]
    best_key = key(best)
    for plan in plans[1:]:
        candidate_key = key(plan)
        if candidate_key > best_key:  # strict: ties keep the earliest plan
            best, best_key = plan, candidate_key
    return best


def load_utility_matrix(path, tolerance: float = 1e-9) -> UtilityMatrix:
    """Load a utility matrix from CSV: header names the agents (first cell
    is a row label such as ``plan``), each data row is a plan id followed
    by one utility per agent."""
    with open(path, newline="", encoding="utf-8") as handle:
        rows = [row for row in csv.reader(handle) if row]
    if len(rows) < 2:
        raise InputError(f"{path}: utility file needs a header and at least one plan row")
    agents = tuple(cell.strip() for cell in rows[0][1:])
    if not agents or any(not agent for agent in agents):
        raise InputError(f"{path}: header must name at least one agent")

    plans = []
    entries = {}
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(agents) + 1:
            raise InputError(
                f"{path}: row {line_no} has {len(row)} fields, expected {len(agents) + 1}"
            )
        plan = row[0].strip()
        if not plan:
            raise InputError(f"{path}: row {line_no} has an empty plan id")
        plans.append(plan)
        for agent, cell in zip(agents, row[1:]):
            try:
                entries[(plan, agent)] = float(cell)
            except ValueError:
                raise InputError(
                    f"{path}: row {line_no}: {cell!r} is not a number"
                ) from None
    return UtilityMatrix(tuple(plans), agents, entries, tolerance)
