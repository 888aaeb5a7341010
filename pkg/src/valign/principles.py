"""The three anchored principle checks and their composition.

Generalization: a plan passes for an actor iff some world in the actor's
belief base is physically possible, satisfies the plan's reasons and action
for the actor, and has every agent to whom the reasons apply performing the
action. An empty belief base yields Indeterminate rather than Violates;
refusing a verdict is safer than fabricating one for an agent with no
coherent beliefs.

Autonomy: a plan violates the principle iff it interferes with another
agent's ethical plan without that agent's informed or implied consent.
Interference and consent are explicit input data; plans flagged as not
ethical are outside the principle's protection.

Utilitarian: within a set of admissible plans (those passing the other two
principles), a plan passes iff its total utility is no less than every
admissible alternative's, up to the matrix tolerance. Totals are
unweighted sums over agents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InputError, ModelError
from .model import (
    ActionPlan,
    AgentId,
    PrincipleVerdict,
    Scenario,
    Verdict,
    holds_at,
    universally_adopted,
)

CONSENT_INFORMED = "informed"
CONSENT_IMPLIED = "implied"
CONSENT_NONE = "none"
_CONSENT_LEVELS = (CONSENT_INFORMED, CONSENT_IMPLIED, CONSENT_NONE)


@dataclass(frozen=True)
class Interference:
    """One plan getting in the way of another agent's plan."""

    actor_plan: str
    affected_agent: AgentId
    affected_plan: str


@dataclass(frozen=True)
class AutonomyContext:
    """Interference relations, consent levels, and per-plan ethical flags.

    ``consent`` maps (affected agent, actor plan id) to a consent level; a
    missing entry counts as no consent. ``ethical_flags`` records whether
    each affected plan itself passes the other principles; only plans
    flagged True are protected. ``declared`` lists extra plan ids known to
    the context even if they appear in no interference.
    """

    interferences: tuple[Interference, ...] = ()
    consent: dict[tuple[AgentId, str], str] = field(default_factory=dict)
    ethical_flags: dict[str, bool] = field(default_factory=dict)
    declared: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "interferences", tuple(self.interferences))
        object.__setattr__(self, "declared", tuple(self.declared))
        for level in self.consent.values():
            if level not in _CONSENT_LEVELS:
                raise InputError(
                    f"consent level must be one of {_CONSENT_LEVELS}, got {level!r}"
                )
        for flag in self.ethical_flags.values():
            if not isinstance(flag, bool):
                raise InputError("ethical flags must be true or false")
        for interference in self.interferences:
            if interference.affected_plan not in self.ethical_flags:
                raise InputError(
                    f"interference references plan {interference.affected_plan!r} "
                    "with no ethical flag"
                )

    def declared_plans(self) -> frozenset[str]:
        ids = set(self.declared)
        ids.update(self.ethical_flags)
        for interference in self.interferences:
            ids.add(interference.actor_plan)
            ids.add(interference.affected_plan)
        for _, actor_plan in self.consent:
            ids.add(actor_plan)
        return frozenset(ids)

    def affected_agents(self) -> frozenset[AgentId]:
        agents = {i.affected_agent for i in self.interferences}
        agents.update(agent for agent, _ in self.consent)
        return frozenset(agents)


@dataclass(frozen=True)
class UtilityMatrix:
    """Per-plan, per-agent utilities in dimensionless welfare units.

    Total over its declared plans x agents; comparisons use an absolute
    tolerance so that within-tolerance totals count as ties.
    """

    plans: tuple[str, ...]
    agents: tuple[AgentId, ...]
    entries: dict[tuple[str, AgentId], float]
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        object.__setattr__(self, "plans", tuple(self.plans))
        object.__setattr__(self, "agents", tuple(self.agents))
        if not self.plans or not self.agents:
            raise InputError("a utility matrix needs at least one plan and one agent")
        if len(set(self.plans)) != len(self.plans):
            raise InputError("duplicate plan ids in utility matrix")
        if len(set(self.agents)) != len(self.agents):
            raise InputError("duplicate agent ids in utility matrix")
        if self.tolerance < 0:
            raise InputError("tolerance must be non-negative")
        expected = {(p, a) for p in self.plans for a in self.agents}
        if set(self.entries) != expected:
            raise InputError("utility matrix entries must cover exactly plans x agents")
        for value in self.entries.values():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InputError(f"utility values must be numbers, got {value!r}")

    def total(self, plan: str) -> float:
        self._check_plan(plan)
        return sum(self.entries[(plan, agent)] for agent in self.agents)

    def minimum(self, plan: str) -> float:
        self._check_plan(plan)
        return min(self.entries[(plan, agent)] for agent in self.agents)

    def _check_plan(self, plan: str) -> None:
        if plan not in self.plans:
            raise InputError(f"utility matrix has no plan {plan!r}")


def check_generalization(
    plan: ActionPlan, scenario: Scenario, actor: AgentId
) -> PrincipleVerdict:
    """Search the actor's belief base for a physically possible world where
    the plan holds for the actor and is universally adopted."""
    if actor not in scenario.agents:
        raise ModelError(f"unknown agent {actor!r}")
    for pred in plan.predicates():
        if not scenario.declares(pred):
            raise ModelError(
                f"plan predicate {pred.name!r} ({pred.kind}) is not declared "
                "in the scenario"
            )
    member_ids = scenario.beliefs_of(actor)
    if not member_ids:
        return PrincipleVerdict(
            Verdict.INDETERMINATE,
            explanation=f"agent {actor!r} has an empty belief base; "
            "generalization cannot be assessed",
        )
    for world_id in member_ids:
        world = scenario.world(world_id)
        if (
            world.physically_possible
            and holds_at(world, plan, actor)
            and universally_adopted(world, plan)
        ):
            return PrincipleVerdict(
                Verdict.SATISFIES,
                witness=world_id,
                explanation=f"world {world_id!r} is believed possible, satisfies "
                f"the reasons and action for {actor!r}, and is universally adopted",
            )
    return PrincipleVerdict(
        Verdict.VIOLATES,
        explanation="no believed, physically possible world satisfies the plan "
        "together with its universal adoption",
    )


def check_autonomy(plan_id: str, ctx: AutonomyContext) -> PrincipleVerdict:
    """Flag any unconsented interference with another agent's ethical plan."""
    if plan_id not in ctx.declared_plans():
        raise InputError(f"plan {plan_id!r} is not declared in the autonomy context")
    for interference in ctx.interferences:
        if interference.actor_plan != plan_id:
            continue
        if not ctx.ethical_flags.get(interference.affected_plan, False):
            continue
        level = ctx.consent.get(
            (interference.affected_agent, plan_id), CONSENT_NONE
        )
        if level == CONSENT_NONE:
            return PrincipleVerdict(
                Verdict.VIOLATES,
                explanation=f"interferes with ethical plan "
                f"{interference.affected_plan!r} of agent "
                f"{interference.affected_agent!r} without consent",
            )
    return PrincipleVerdict(
        Verdict.SATISFIES,
        explanation="no unconsented interference with another agent's ethical plan",
    )


def check_utilitarian(
    plan_id: str, admissible: Iterable[str], util: UtilityMatrix
) -> PrincipleVerdict:
    """Compare a plan's total utility against every admissible alternative."""
    admissible = list(dict.fromkeys(admissible))
    if plan_id not in admissible:
        raise InputError(f"plan {plan_id!r} is not in the admissible set")
    totals = {p: util.total(p) for p in admissible}
    best = max(totals.values())
    mine = totals[plan_id]
    if mine >= best - util.tolerance:
        return PrincipleVerdict(
            Verdict.SATISFIES,
            explanation=f"total utility {mine:g} matches the admissible maximum "
            f"{best:g} within tolerance",
        )
    return PrincipleVerdict(
        Verdict.VIOLATES,
        explanation=f"total utility {mine:g} is below an admissible "
        f"alternative's {best:g}",
    )


class OverallStatus(Enum):
    ETHICAL = "Ethical"
    UNETHICAL = "Unethical"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class PlanAssessment:
    plan: str
    generalization: PrincipleVerdict
    autonomy: PrincipleVerdict
    utilitarian: PrincipleVerdict
    overall: OverallStatus

    def verdicts(self) -> dict[str, PrincipleVerdict]:
        return {
            "generalization": self.generalization,
            "autonomy": self.autonomy,
            "utilitarian": self.utilitarian,
        }


@dataclass(frozen=True)
class EthicsReport:
    """Per-plan verdicts in input order, serializable deterministically."""

    assessments: tuple[PlanAssessment, ...]

    def to_dict(self) -> dict:
        def verdict_dict(v: PrincipleVerdict) -> dict:
            return {
                "status": v.status.value,
                "witness": v.witness,
                "explanation": v.explanation,
            }

        return {
            "plans": [
                {
                    "plan": a.plan,
                    "generalization": verdict_dict(a.generalization),
                    "autonomy": verdict_dict(a.autonomy),
                    "utilitarian": verdict_dict(a.utilitarian),
                    "overall": a.overall.value,
                }
                for a in self.assessments
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _overall(*verdicts: PrincipleVerdict) -> OverallStatus:
    statuses = [v.status for v in verdicts]
    if all(s is Verdict.SATISFIES for s in statuses):
        return OverallStatus.ETHICAL
    if any(s is Verdict.VIOLATES for s in statuses):
        return OverallStatus.UNETHICAL
    return OverallStatus.INDETERMINATE


def evaluate_all(
    plans: Sequence[ActionPlan],
    scenario: Scenario,
    actor: AgentId,
    ctx: AutonomyContext | None = None,
    util: UtilityMatrix | None = None,
    extra_admissible: Iterable[str] = (),
) -> EthicsReport:
    """Run all three principle checks over a set of plans.

    Generalization and autonomy decide admissibility first; the utilitarian
    comparison then runs within the admissible set. Plans outside it get an
    Indeterminate utilitarian verdict, since the comparison does not apply
    to them. ``extra_admissible`` names alternatives outside the evaluated
    set that the caller asserts are admissible (they must be covered by the
    utility matrix); with no matrix the utilitarian check passes vacuously.
    A plan is Ethical iff all three checks come back Satisfies.
    """
    plans = list(plans)
    names = [p.name for p in plans]
    if len(set(names)) != len(names):
        raise InputError("duplicate plan names")
    extra = [p for p in dict.fromkeys(extra_admissible) if p not in names]
    if extra and util is None:
        raise InputError("extra admissible alternatives require a utility matrix")

    if ctx is not None:
        for agent in ctx.affected_agents():
            if agent not in scenario.agents:
                raise InputError(
                    f"autonomy context references unknown agent {agent!r}"
                )

    generalization = {}
    autonomy = {}
    for plan in plans:
        generalization[plan.name] = check_generalization(plan, scenario, actor)
        if ctx is None:
            autonomy[plan.name] = PrincipleVerdict(
                Verdict.SATISFIES,
                explanation="no interference data supplied",
            )
        else:
            autonomy[plan.name] = check_autonomy(plan.name, ctx)

    admissible = [
        name
        for name in names
        if generalization[name].status is Verdict.SATISFIES
        and autonomy[name].status is Verdict.SATISFIES
    ] + extra

    assessments = []
    for plan in plans:
        name = plan.name
        if name not in admissible:
            utilitarian = PrincipleVerdict(
                Verdict.INDETERMINATE,
                explanation="plan is not admissible (generalization or autonomy "
                "not satisfied); the utilitarian comparison does not apply",
            )
        elif util is None:
            utilitarian = PrincipleVerdict(
                Verdict.SATISFIES,
                explanation="no utility data supplied; no admissible alternative "
                "dominates",
            )
        else:
            utilitarian = check_utilitarian(name, admissible, util)
        assessments.append(
            PlanAssessment(
                plan=name,
                generalization=generalization[name],
                autonomy=autonomy[name],
                utilitarian=utilitarian,
                overall=_overall(generalization[name], autonomy[name], utilitarian),
            )
        )
    return EthicsReport(tuple(assessments))


def autonomy_context_from_dict(data) -> AutonomyContext:
    if not isinstance(data, dict):
        raise InputError("autonomy document must be a JSON object")
    declared = data.get("plans", [])
    if not isinstance(declared, list):
        raise InputError("autonomy document: plans must be a list of plan ids")

    interferences = []
    for entry in data.get("interferences", []):
        if not isinstance(entry, dict):
            raise InputError("interference entries must be objects")
        try:
            interferences.append(
                Interference(entry["plan"], entry["agent"], entry["affected_plan"])
            )
        except KeyError as exc:
            raise InputError(
                f"interference entry is missing key {exc.args[0]!r}"
            ) from exc

    consent = {}
    for entry in data.get("consent", []):
        if not isinstance(entry, dict):
            raise InputError("consent entries must be objects")
        try:
            consent[(entry["agent"], entry["plan"])] = entry["level"]
        except KeyError as exc:
            raise InputError(f"consent entry is missing key {exc.args[0]!r}") from exc

    flags = data.get("ethical_flags", {})
    if not isinstance(flags, dict):
        raise InputError("autonomy document: ethical_flags must be an object")

    return AutonomyContext(
        interferences=tuple(interferences),
        consent=consent,
        ethical_flags=dict(flags),
        declared=tuple(declared),
    )


def load_autonomy_context(path) -> AutonomyContext:
    """Load interference and consent data from JSON: optional ``plans`` list,
    ``interferences`` (``{"plan", "agent", "affected_plan"}``), ``consent``
    (``{"agent", "plan", "level"}`` with level informed, implied or none)
    and ``ethical_flags`` (``{plan id: bool}``)."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return autonomy_context_from_dict(data)
