"""Finite world models for evaluating action plans.

A scenario fixes a finite universe: agents, unary predicates split into
reason and action kinds, worlds that assign a truth value to every ground
atom and carry a physical-possibility flag, and per-agent belief bases
listing the worlds that agent cannot rationally rule out.

Everything here is immutable after construction and every operation is a
pure function, so scenarios can be evaluated concurrently without locks.
Belief bases are single-level: an agent believes a set of worlds, and no
world nests further belief structure (no introspection, no beliefs about
beliefs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
import re

from .errors import InputError, ModelError

REASON = "reason"
ACTION = "action"
_KINDS = (REASON, ACTION)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_GROUND_ATOM = re.compile(
    r"(?P<pred>[A-Za-z_][A-Za-z0-9_]*)\((?P<agent>[A-Za-z_][A-Za-z0-9_]*)\)\Z"
)

AgentId = str
GroundAtom = tuple[str, str]


def _require_ident(value, what: str) -> str:
    if not isinstance(value, str) or not _IDENT.match(value):
        raise InputError(f"{what} must be an identifier, got {value!r}")
    return value


def parse_ground_atom(text: str) -> GroundAtom:
    """Split ``"pred(agent)"`` into its predicate and agent names.

    Only unary atoms are accepted; higher arities are rejected outright.
    """
    if not isinstance(text, str):
        raise InputError(f"ground atom must be a string, got {text!r}")
    match = _GROUND_ATOM.match(text.strip())
    if not match:
        if "," in text:
            raise InputError(
                f"ground atom {text!r} is not unary; predicates apply to exactly one agent"
            )
        raise InputError(f"{text!r} is not a ground atom of the form pred(agent)")
    return match.group("pred"), match.group("agent")


@dataclass(frozen=True)
class PredicateSymbol:
    """A named unary predicate, fixed at declaration as a reason or an action."""

    name: str
    kind: str

    def __post_init__(self) -> None:
        _require_ident(self.name, "predicate name")
        if self.kind not in _KINDS:
            raise InputError(
                f"predicate kind must be one of {_KINDS}, got {self.kind!r}"
            )


@dataclass(frozen=True)
class World:
    """One complete state of affairs: a total truth assignment to ground
    atoms plus a flag saying whether the state is physically achievable."""

    id: str
    physically_possible: bool
    atoms: dict[GroundAtom, bool]

    def __post_init__(self) -> None:
        _require_ident(self.id, "world id")
        for key, value in self.atoms.items():
            if not isinstance(value, bool):
                raise InputError(
                    f"world {self.id!r}: atom {key!r} must be true or false, got {value!r}"
                )

    def agents(self) -> tuple[AgentId, ...]:
        return tuple(sorted({agent for _, agent in self.atoms}))


@dataclass(frozen=True)
class ActionPlan:
    """A plan: an agent variable, the reasons taken to justify an action,
    and the action itself.

    The justification arrow between reasons and action is structural, not
    logical entailment; nothing here claims the reasons imply the action.
    Reason order is preserved for provenance, though checks treat the
    reasons as a set. Reasons are expected to be the most general
    conditions the agent acts on, but that is a modeling guideline this
    type cannot enforce.
    """

    name: str
    agent_var: str
    reasons: tuple[PredicateSymbol, ...]
    action: PredicateSymbol

    def __post_init__(self) -> None:
        _require_ident(self.name, "plan name")
        _require_ident(self.agent_var, "agent variable")
        object.__setattr__(self, "reasons", tuple(self.reasons))
        if not self.reasons:
            raise InputError(f"plan {self.name!r} has no reasons; at least one is required")
        for reason in self.reasons:
            if reason.kind != REASON:
                raise InputError(
                    f"plan {self.name!r}: {reason.name!r} is declared {reason.kind}, "
                    "but every reason must have kind reason"
                )
        if self.action.kind != ACTION:
            raise InputError(
                f"plan {self.name!r}: action {self.action.name!r} must have kind action"
            )

    def predicates(self) -> tuple[PredicateSymbol, ...]:
        return (*self.reasons, self.action)


class Verdict(Enum):
    SATISFIES = "Satisfies"
    VIOLATES = "Violates"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class PrincipleVerdict:
    """Outcome of one principle check, with an optional witness world and a
    human-readable account of what decided it."""

    status: Verdict
    witness: str | None = None
    explanation: str = ""


@dataclass(frozen=True)
class Scenario:
    """A finite model: agents, declared predicates, worlds, and belief bases.

    Construction validates the whole structure: worlds must be total over
    predicates x agents, belief bases may only name declared agents and
    existing worlds, and all names must be unique.
    """

    agents: tuple[AgentId, ...]
    predicates: tuple[PredicateSymbol, ...]
    worlds: tuple[World, ...]
    beliefs: dict[AgentId, tuple[str, ...]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "predicates", tuple(self.predicates))
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(
            self, "beliefs", {agent: tuple(ids) for agent, ids in self.beliefs.items()}
        )

        if not self.agents:
            raise ModelError("a scenario needs at least one agent")
        if not self.worlds:
            raise ModelError("a scenario needs at least one world")
        for agent in self.agents:
            _require_ident(agent, "agent id")
        if len(set(self.agents)) != len(self.agents):
            raise ModelError("duplicate agent ids")
        names = [p.name for p in self.predicates]
        if len(set(names)) != len(names):
            raise ModelError("duplicate predicate names")
        ids = [w.id for w in self.worlds]
        if len(set(ids)) != len(ids):
            raise ModelError("duplicate world ids")

        expected = {(p.name, a) for p in self.predicates for a in self.agents}
        for world in self.worlds:
            keys = set(world.atoms)
            missing = expected - keys
            if missing:
                pred, agent = sorted(missing)[0]
                raise ModelError(
                    f"world {world.id!r} assigns no truth value to {pred}({agent})"
                )
            extra = keys - expected
            if extra:
                pred, agent = sorted(extra)[0]
                raise ModelError(
                    f"world {world.id!r} assigns {pred}({agent}), which is not declared"
                )

        index = {w.id: w for w in self.worlds}
        for agent, member_ids in self.beliefs.items():
            if agent not in self.agents:
                raise ModelError(f"belief base declared for unknown agent {agent!r}")
            for world_id in member_ids:
                if world_id not in index:
                    raise ModelError(
                        f"belief base of {agent!r} references unknown world {world_id!r}"
                    )
        object.__setattr__(self, "_index", index)

    def world(self, world_id: str) -> World:
        try:
            return self._index[world_id]
        except KeyError:
            raise ModelError(f"unknown world {world_id!r}") from None

    def beliefs_of(self, agent: AgentId) -> tuple[str, ...]:
        """World ids the agent cannot rule out; empty if none were declared."""
        if agent not in self.agents:
            raise ModelError(f"unknown agent {agent!r}")
        return self.beliefs.get(agent, ())

    def predicate(self, name: str) -> PredicateSymbol | None:
        for pred in self.predicates:
            if pred.name == name:
                return pred
        return None

    def declares(self, symbol: PredicateSymbol) -> bool:
        return self.predicate(symbol.name) == symbol

    def with_beliefs(self, agent: AgentId, world_ids) -> Scenario:
        """A copy of this scenario with one agent's belief base replaced."""
        if agent not in self.agents:
            raise ModelError(f"unknown agent {agent!r}")
        beliefs = dict(self.beliefs)
        beliefs[agent] = tuple(world_ids)
        return replace(self, beliefs=beliefs)


def _lookup(world: World, predicate: str, agent: AgentId) -> bool:
    try:
        return world.atoms[(predicate, agent)]
    except KeyError:
        raise ModelError(
            f"world {world.id!r} assigns no truth value to {predicate}({agent})"
        ) from None


def holds_at(world: World, plan: ActionPlan, binding: AgentId) -> bool:
    """True iff every reason atom and the action atom hold at ``world`` with
    the plan's agent variable bound to ``binding``."""
    values = [_lookup(world, pred.name, binding) for pred in plan.predicates()]
    return all(values)


def universally_adopted(world: World, plan: ActionPlan) -> bool:
    """True iff, at ``world``, every agent whose atoms satisfy all the plan's
    reasons also performs the plan's action (material implication per agent)."""
    for agent in world.agents():
        applies = all(_lookup(world, reason.name, agent) for reason in plan.reasons)
        if applies and not _lookup(world, plan.action.name, agent):
            return False
    return True


def _require_key(data: dict, key: str, what: str):
    if key not in data:
        raise InputError(f"{what} is missing key {key!r}")
    return data[key]


def scenario_from_dict(data) -> Scenario:
    """Build a scenario from its document form (see ``load_scenario``)."""
    if not isinstance(data, dict):
        raise InputError("scenario document must be a JSON object")
    raw_agents = _require_key(data, "agents", "scenario document")
    raw_preds = _require_key(data, "predicates", "scenario document")
    raw_worlds = _require_key(data, "worlds", "scenario document")
    raw_beliefs = _require_key(data, "beliefs", "scenario document")
    if not isinstance(raw_agents, list) or not isinstance(raw_preds, list) \
            or not isinstance(raw_worlds, list) or not isinstance(raw_beliefs, dict):
        raise InputError(
            "scenario document needs agents[], predicates[], worlds[] and beliefs{}"
        )

    agents = tuple(_require_ident(a, "agent id") for a in raw_agents)

    predicates = []
    for entry in raw_preds:
        if not isinstance(entry, dict):
            raise InputError(f"predicate entry must be an object, got {entry!r}")
        predicates.append(
            PredicateSymbol(
                _require_key(entry, "name", "predicate entry"),
                _require_key(entry, "kind", "predicate entry"),
            )
        )

    worlds = []
    for entry in raw_worlds:
        if not isinstance(entry, dict):
            raise InputError(f"world entry must be an object, got {entry!r}")
        world_id = _require_key(entry, "id", "world entry")
        possible = _require_key(entry, "physically_possible", f"world {world_id!r}")
        if not isinstance(possible, bool):
            raise InputError(
                f"world {world_id!r}: physically_possible must be true or false"
            )
        raw_atoms = _require_key(entry, "atoms", f"world {world_id!r}")
        if not isinstance(raw_atoms, dict):
            raise InputError(f"world {world_id!r}: atoms must be an object")
        atoms = {}
        for key, value in raw_atoms.items():
            atom = parse_ground_atom(key)
            if atom in atoms:
                raise InputError(f"world {world_id!r}: duplicate atom {key!r}")
            if not isinstance(value, bool):
                raise InputError(
                    f"world {world_id!r}: atom {key!r} must be true or false"
                )
            atoms[atom] = value
        worlds.append(World(world_id, possible, atoms))

    beliefs = {}
    for agent, member_ids in raw_beliefs.items():
        if not isinstance(member_ids, list):
            raise InputError(f"beliefs of {agent!r} must be a list of world ids")
        beliefs[agent] = tuple(member_ids)

    return Scenario(agents, tuple(predicates), tuple(worlds), beliefs)


def load_scenario(path) -> Scenario:
    """Load a scenario from a JSON file.

    Expected shape: ``agents`` (list of ids), ``predicates`` (list of
    ``{"name": ..., "kind": "reason"|"action"}``), ``worlds`` (list of
    ``{"id": ..., "physically_possible": bool, "atoms": {"pred(agent)":
    bool, ...}}``) and ``beliefs`` (``{agent: [world ids]}``). Worlds must
    assign every declared predicate to every declared agent.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return scenario_from_dict(data)
