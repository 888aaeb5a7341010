"""Core model types, atom evaluation, and the scenario loader."""

import random

import pytest

from valign.errors import InputError, ModelError
from valign.model import (
    ACTION,
    REASON,
    ActionPlan,
    PredicateSymbol,
    Scenario,
    World,
    holds_at,
    load_scenario,
    parse_ground_atom,
    scenario_from_dict,
    universally_adopted,
)
from valign.data import bundled

from oracles import brute_force_adopted, brute_force_holds, random_scenario


def make_world(wid, possible, **atom_values):
    """Atoms given as pred_agent=bool keyword pairs, split on the last underscore."""
    atoms = {}
    for key, value in atom_values.items():
        pred, _, agent = key.rpartition("_")
        atoms[(pred, agent)] = value
    return World(wid, possible, atoms)


@pytest.fixture
def theft_plan():
    return ActionPlan(
        "theft",
        "x",
        (PredicateSymbol("wants", REASON), PredicateSymbol("away", REASON)),
        PredicateSymbol("steal", ACTION),
    )


class TestTypes:
    def test_predicate_kind_is_checked(self):
        with pytest.raises(InputError):
            PredicateSymbol("p", "verb")

    def test_predicate_name_must_be_identifier(self):
        with pytest.raises(InputError):
            PredicateSymbol("not a name", REASON)

    def test_plan_requires_reasons(self):
        with pytest.raises(InputError, match="no reasons"):
            ActionPlan("p", "x", (), PredicateSymbol("act", ACTION))

    def test_plan_rejects_wrong_kinds(self):
        action = PredicateSymbol("act", ACTION)
        with pytest.raises(InputError, match="kind reason"):
            ActionPlan("p", "x", (action,), action)
        reason = PredicateSymbol("r", REASON)
        with pytest.raises(InputError, match="kind action"):
            ActionPlan("p", "x", (reason,), reason)

    def test_world_atoms_must_be_boolean(self):
        with pytest.raises(InputError):
            World("w", True, {("p", "a"): 1})


class TestParseGroundAtom:
    def test_basic(self):
        assert parse_ground_atom("wants(a)") == ("wants", "a")

    def test_whitespace_tolerated_around_atom(self):
        assert parse_ground_atom(" wants(a) ") == ("wants", "a")

    def test_higher_arity_rejected(self):
        with pytest.raises(InputError, match="not unary"):
            parse_ground_atom("gives(a,b)")

    @pytest.mark.parametrize("bad", ["wants", "wants()", "(a)", "wants(a", "1p(a)"])
    def test_malformed_rejected(self, bad):
        with pytest.raises(InputError):
            parse_ground_atom(bad)


class TestHoldsAt(object):
    def test_traffic_style_world_all_true(self, theft_plan):
        world = make_world(
            "w", True, wants_a=True, away_a=True, steal_a=True,
            wants_b=True, away_b=True, steal_b=False,
        )
        assert holds_at(world, theft_plan, "a") is True

    def test_all_false_world(self, theft_plan):
        world = make_world(
            "w", True, wants_a=False, away_a=False, steal_a=False,
        )
        assert holds_at(world, theft_plan, "a") is False

    def test_unknown_agent_raises_even_after_false_reason(self, theft_plan):
        # The action atom for a missing binding must still surface as a
        # model error, not be skipped by short-circuiting.
        world = make_world("w", True, wants_a=False, away_a=False, steal_a=False)
        with pytest.raises(ModelError):
            holds_at(world, theft_plan, "b")

    def test_matches_direct_conjunction_on_random_scenarios(self):
        rng = random.Random(11)
        for _ in range(200):
            scenario, plan, actor = random_scenario(rng)
            for world in scenario.worlds:
                assert holds_at(world, plan, actor) == brute_force_holds(
                    world, plan, actor
                )

    def test_pure_repeated_calls_agree(self, theft_plan):
        world = make_world("w", True, wants_a=True, away_a=True, steal_a=True)
        first = holds_at(world, theft_plan, "a")
        assert all(holds_at(world, theft_plan, "a") == first for _ in range(5))


class TestUniversallyAdopted:
    def test_vacuous_when_no_agent_has_reasons(self, theft_plan):
        world = make_world(
            "w", True, wants_a=False, away_a=True, steal_a=False,
            wants_b=True, away_b=False, steal_b=False,
        )
        assert universally_adopted(world, theft_plan) is True

    def test_counterexample_agent(self, theft_plan):
        world = make_world(
            "w", True, wants_a=True, away_a=True, steal_a=True,
            wants_b=True, away_b=True, steal_b=False,
        )
        assert universally_adopted(world, theft_plan) is False

    def test_matches_per_agent_loop_on_random_worlds(self):
        rng = random.Random(12)
        for _ in range(200):
            scenario, plan, _ = random_scenario(rng, max_agents=4)
            for world in scenario.worlds:
                assert universally_adopted(world, plan) == brute_force_adopted(
                    world, plan, scenario.agents
                )

    def test_removing_failing_agent_never_flips_true_to_false(self, theft_plan):
        rng = random.Random(13)
        for _ in range(100):
            scenario, plan, _ = random_scenario(rng, max_agents=3)
            world = scenario.worlds[0]
            before = universally_adopted(world, plan)
            failing = [
                agent
                for agent in scenario.agents
                if not all(world.atoms[(r.name, agent)] for r in plan.reasons)
            ]
            if not failing or len(scenario.agents) == 1:
                continue
            gone = failing[0]
            smaller = World(
                world.id,
                world.physically_possible,
                {k: v for k, v in world.atoms.items() if k[1] != gone},
            )
            after = universally_adopted(smaller, plan)
            assert not (before and not after)

    def test_single_agent_equals_material_implication(self, theft_plan):
        for wants in (False, True):
            for away in (False, True):
                for steal in (False, True):
                    world = make_world(
                        "w", True, wants_a=wants, away_a=away, steal_a=steal
                    )
                    applies = wants and away
                    expected = (not applies) or steal
                    assert universally_adopted(world, theft_plan) == expected


class TestScenarioValidation:
    def base_dict(self):
        return {
            "agents": ["a"],
            "predicates": [
                {"name": "wants", "kind": "reason"},
                {"name": "steal", "kind": "action"},
            ],
            "worlds": [
                {
                    "id": "w1",
                    "physically_possible": True,
                    "atoms": {"wants(a)": True, "steal(a)": False},
                }
            ],
            "beliefs": {"a": ["w1"]},
        }

    def test_loads_valid_document(self):
        scenario = scenario_from_dict(self.base_dict())
        assert scenario.agents == ("a",)
        assert scenario.world("w1").physically_possible is True
        assert scenario.beliefs_of("a") == ("w1",)

    def test_missing_atom_rejected(self):
        data = self.base_dict()
        del data["worlds"][0]["atoms"]["steal(a)"]
        with pytest.raises(ModelError, match="steal\\(a\\)"):
            scenario_from_dict(data)

    def test_undeclared_atom_rejected(self):
        data = self.base_dict()
        data["worlds"][0]["atoms"]["extra(a)"] = True
        with pytest.raises(ModelError, match="not declared"):
            scenario_from_dict(data)

    def test_unknown_belief_world_rejected(self):
        data = self.base_dict()
        data["beliefs"]["a"] = ["w1", "nope"]
        with pytest.raises(ModelError, match="nope"):
            scenario_from_dict(data)

    def test_belief_base_for_unknown_agent_rejected(self):
        data = self.base_dict()
        data["beliefs"]["ghost"] = ["w1"]
        with pytest.raises(ModelError, match="ghost"):
            scenario_from_dict(data)

    def test_higher_arity_atom_rejected_at_load(self):
        data = self.base_dict()
        data["worlds"][0]["atoms"]["wants(a,b)"] = True
        with pytest.raises(InputError, match="not unary"):
            scenario_from_dict(data)

    def test_needs_at_least_one_agent_and_world(self):
        data = self.base_dict()
        data["agents"] = []
        data["beliefs"] = {}
        data["worlds"][0]["atoms"] = {}
        with pytest.raises(ModelError, match="at least one agent"):
            scenario_from_dict(data)
        data = self.base_dict()
        data["worlds"] = []
        data["beliefs"] = {}
        with pytest.raises(ModelError, match="at least one world"):
            scenario_from_dict(data)

    def test_duplicate_world_ids_rejected(self):
        data = self.base_dict()
        data["worlds"].append(dict(data["worlds"][0]))
        with pytest.raises(ModelError, match="duplicate world ids"):
            scenario_from_dict(data)

    def test_non_bool_possibility_flag_rejected(self):
        data = self.base_dict()
        data["worlds"][0]["physically_possible"] = "yes"
        with pytest.raises(InputError):
            scenario_from_dict(data)

    def test_with_beliefs_returns_new_scenario(self):
        scenario = scenario_from_dict(self.base_dict())
        restricted = scenario.with_beliefs("a", ())
        assert restricted.beliefs_of("a") == ()
        assert scenario.beliefs_of("a") == ("w1",)

    def test_bundled_scenarios_load(self):
        for name in ("shop_theft.json", "traffic.json", "traffic_accepted.json",
                     "traffic_unaccepted.json"):
            scenario = load_scenario(bundled(name))
            assert scenario.agents == ("a", "b")

    def test_invalid_json_reported_with_path(self, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{", encoding="utf-8")
        with pytest.raises(InputError, match="invalid JSON"):
            load_scenario(bad)
