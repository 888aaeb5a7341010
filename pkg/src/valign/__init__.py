"""Evaluate machine action plans against anchored ethical principles.

The library checks plans over explicit finite world models (generalization,
autonomy, and utilitarian principles), lints argument structures for
is/ought slippage, aggregates ranked ballots and polls, and lets aggregated
preferences feed the principle checks as empirical premises only, never as
verdicts. A small DSL describes plans; everything else travels as JSON or
CSV. See the ``valign`` command for the file-level workflow.
"""

from .errors import (
    EmptyBeliefBaseWarning,
    InputError,
    ModelError,
    PlanSourceError,
    PlanSyntaxError,
    PlanValidationError,
    ValignError,
)
from .fallacy import (
    Argument,
    LintResult,
    LintVerdict,
    Statement,
    argument_from_dict,
    lint_argument,
    load_argument,
)
from .model import (
    ACTION,
    REASON,
    ActionPlan,
    AgentId,
    PredicateSymbol,
    PrincipleVerdict,
    Scenario,
    Verdict,
    World,
    holds_at,
    load_scenario,
    parse_ground_atom,
    scenario_from_dict,
    universally_adopted,
)
from .mimesis import (
    Ballot,
    Poll,
    PreferenceProfile,
    PremiseEstimate,
    apply_premise,
    borda_count,
    estimate_premise,
    lint_aggregation_argument,
    load_ballots,
    load_poll,
)
from .plandsl import parse_plan, print_plan
from .principles import (
    AutonomyContext,
    EthicsReport,
    Interference,
    OverallStatus,
    PlanAssessment,
    UtilityMatrix,
    check_autonomy,
    check_generalization,
    check_utilitarian,
    evaluate_all,
    load_autonomy_context,
)
from .welfare import SelectionRule, load_utility_matrix, select_plan

__version__ = "0.1.0"

__all__ = [
    "ACTION",
    "ActionPlan",
    "AgentId",
    "Argument",
    "AutonomyContext",
    "Ballot",
    "EmptyBeliefBaseWarning",
    "EthicsReport",
    "InputError",
    "Interference",
    "LintResult",
    "LintVerdict",
    "ModelError",
    "OverallStatus",
    "PlanAssessment",
    "PlanSourceError",
    "PlanSyntaxError",
    "PlanValidationError",
    "Poll",
    "PredicateSymbol",
    "PreferenceProfile",
    "PremiseEstimate",
    "PrincipleVerdict",
    "REASON",
    "Scenario",
    "SelectionRule",
    "Statement",
    "UtilityMatrix",
    "ValignError",
    "Verdict",
    "World",
    "apply_premise",
    "argument_from_dict",
    "borda_count",
    "check_autonomy",
    "check_generalization",
    "check_utilitarian",
    "estimate_premise",
    "evaluate_all",
    "holds_at",
    "lint_aggregation_argument",
    "lint_argument",
    "load_argument",
    "load_autonomy_context",
    "load_ballots",
    "load_poll",
    "load_scenario",
    "load_utility_matrix",
    "parse_ground_atom",
    "parse_plan",
    "print_plan",
    "scenario_from_dict",
    "select_plan",
    "universally_adopted",
]
