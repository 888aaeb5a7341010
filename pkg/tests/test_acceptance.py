"""Acceptance suite: one test per shipped criterion, at its stated size.

Each criterion prints a single ACCEPTANCE PASS/FAIL line (visible with
``pytest -s`` or in captured output). Random sections use fixed seeds so
reruns are bit-for-bit repeatable.
"""

import functools
import random
import time
from itertools import product
from pathlib import Path

import pytest

from valign.cli import main as cli_main
from valign.data import bundled
from valign.errors import InputError, PlanSourceError
from valign.fallacy import Argument, LintVerdict, Statement, lint_argument, load_argument
from valign.mimesis import (
    Ballot,
    PreferenceProfile,
    apply_premise,
    borda_count,
    estimate_premise,
    load_ballots,
    load_poll,
)
from valign.model import Scenario, Verdict, World, load_scenario
from valign.plandsl import parse_plan, print_plan
from valign.principles import UtilityMatrix, check_generalization, evaluate_all
from valign.welfare import SelectionRule, select_plan

from oracles import (
    brute_force_borda,
    brute_force_generalization,
    brute_force_select,
    random_plan,
    random_scenario,
    random_utility_matrix,
)

MALFORMED_DIR = Path(__file__).parent / "data" / "malformed_plans"


def criterion(name):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE FAIL: {name}")
                raise
            print(f"ACCEPTANCE PASS: {name}")
            return result

        return wrapper

    return decorate


@criterion("fallacy schema equivalence (exhaustive, <= 3 premises)")
def test_fallacy_schema_equivalence():
    start = time.perf_counter()
    checked = 0
    for count in range(4):
        for flags in product([False, True], repeat=count):
            for normative in (False, True):
                for grounded in (False, True):
                    premises = tuple(
                        Statement(f"premise {i}", flag) for i, flag in enumerate(flags)
                    )
                    conclusion = Statement("conclusion", normative)
                    if count == 0 and grounded:
                        # malformed by construction: nothing can ground it
                        with pytest.raises(InputError):
                            Argument(premises, conclusion, grounded)
                        continue
                    verdict = lint_argument(
                        Argument(premises, conclusion, grounded)
                    ).verdict
                    # direct evaluation of the contrapositive: fallacy iff
                    # no normative premise, normative conclusion, grounded
                    expected = not any(flags) and normative and grounded
                    assert (verdict is LintVerdict.FALLACY_DETECTED) == expected
                    checked += 1
    assert checked == sum(2 ** n * 4 for n in range(1, 4)) + 2  # n=0 keeps 2 legal combos

    truth_telling = lint_argument(load_argument(bundled("truth_telling.json")))
    assert truth_telling.verdict is LintVerdict.FALLACY_DETECTED
    footnote = lint_argument(load_argument(bundled("groundless_disjunct.json")))
    assert footnote.verdict is LintVerdict.GROUNDLESS_NORMATIVE_ELEMENT

    assert time.perf_counter() - start < 1.0


@criterion("shipped scenario verdicts (theft violates, traffic flips on acceptance)")
def test_paper_scenario_verdicts():
    theft = parse_plan(bundled("theft.plan").read_text(encoding="utf-8"))
    traffic = parse_plan(bundled("enter_traffic.plan").read_text(encoding="utf-8"))
    cases = [
        (theft, "shop_theft.json", Verdict.VIOLATES),
        (traffic, "traffic_accepted.json", Verdict.SATISFIES),
        (traffic, "traffic_unaccepted.json", Verdict.VIOLATES),
    ]
    for plan, scenario_name, expected in cases:
        scenario = load_scenario(bundled(scenario_name))
        start = time.perf_counter()
        verdict = check_generalization(plan, scenario, "a")
        elapsed = time.perf_counter() - start
        assert verdict.status is expected, scenario_name
        assert elapsed < 1.0
        if expected is Verdict.SATISFIES:
            assert verdict.witness is not None


@criterion("generalization equals exhaustive belief-base search (500 scenarios)")
def test_generalization_oracle_equivalence():
    rng = random.Random(2024)
    mismatches = 0
    for _ in range(500):
        scenario, plan, actor = random_scenario(
            rng, max_agents=3, max_worlds=8, max_reasons=3
        )
        expected_status, expected_witness = brute_force_generalization(
            scenario, plan, actor
        )
        verdict = check_generalization(plan, scenario, actor)
        if verdict.status.value != expected_status or verdict.witness != expected_witness:
            mismatches += 1
    assert mismatches == 0


@criterion("generalization monotone under belief growth (500 pairs)")
def test_generalization_monotonicity():
    rng = random.Random(2025)
    for _ in range(500):
        scenario, plan, actor = random_scenario(rng)
        before = check_generalization(plan, scenario, actor).status
        atoms = {
            (pred.name, agent): rng.random() < 0.5
            for pred in scenario.predicates
            for agent in scenario.agents
        }
        extra = World("w_added", rng.random() < 0.7, atoms)
        grown = Scenario(
            scenario.agents,
            scenario.predicates,
            scenario.worlds + (extra,),
            {**scenario.beliefs, actor: scenario.beliefs_of(actor) + ("w_added",)},
        )
        after = check_generalization(plan, grown, actor).status
        assert not (before is Verdict.SATISFIES and after is Verdict.VIOLATES)


@criterion("positional scores equal per-ballot summation (1000 profiles)")
def test_borda_oracle_equivalence():
    rng = random.Random(2026)
    for _ in range(1000):
        k = rng.randint(1, 4)
        candidates = [f"c{i}" for i in range(k)]
        ballots = []
        for _ in range(rng.randint(1, 5)):
            ranking = candidates[:]
            rng.shuffle(ranking)
            ballots.append(Ballot(tuple(ranking), rng.randint(1, 9)))
        profile = PreferenceProfile(tuple(candidates), tuple(ballots))
        scores, winners = borda_count(profile)
        assert scores == brute_force_borda(profile)
        top = max(scores.values())
        assert winners == {c for c, s in scores.items() if s == top}

    profile = load_ballots(bundled("suffrage_1838.csv"))
    scores, winners = borda_count(profile)
    assert winners == {"deny_suffrage"}
    assert scores["deny_suffrage"] == 77


@criterion("welfare selection equals lexicographic oracle (1000 matrices, 200 affine replays)")
def test_welfare_oracle_equivalence():
    rng = random.Random(2027)
    for _ in range(1000):
        util = random_utility_matrix(rng, max_plans=6, max_agents=6)
        for rule in SelectionRule:
            assert select_plan(util.plans, util, rule) == brute_force_select(
                util.plans, util, rule.value
            )
    for _ in range(200):
        util = random_utility_matrix(rng, max_plans=6, max_agents=6)
        scale = rng.choice([0.5, 2.0, 3.0, 10.0])
        shift = float(rng.randint(-6, 6))
        rescaled = UtilityMatrix(
            util.plans,
            util.agents,
            {key: scale * value + shift for key, value in util.entries.items()},
        )
        for rule in SelectionRule:
            assert select_plan(util.plans, util, rule) == select_plan(
                rescaled.plans, rescaled, rule
            )


@criterion("hybrid pipeline flips with the poll majority and is identity at 50/50")
def test_hybrid_flip():
    plan = parse_plan(bundled("enter_traffic.plan").read_text(encoding="utf-8"))
    scenario = load_scenario(bundled("traffic.json"))
    native = evaluate_all([plan], scenario, "a").assessments[0].overall

    def pipeline(poll_name):
        poll = load_poll(bundled(poll_name))
        estimate = estimate_premise(poll, 0.5)
        updated = apply_premise(scenario, "a", estimate, poll.proposition)
        return evaluate_all([plan], updated, "a").assessments[0].overall

    strong_yes = pipeline("poll_accept_80_20.json")
    strong_no = pipeline("poll_accept_20_80.json")
    split = pipeline("poll_accept_50_50.json")

    assert strong_yes.value == "Ethical"
    assert strong_no.value == "Unethical"
    assert strong_yes != strong_no
    assert split == native


@criterion("DSL roundtrip identity (1000 plans) and positioned corpus errors")
def test_dsl_roundtrip(capsys):
    rng = random.Random(2028)
    for _ in range(1000):
        plan = random_plan(rng)
        assert parse_plan(print_plan(plan)) == plan

    corpus = sorted(MALFORMED_DIR.glob("*.plan"))
    assert corpus, "malformed corpus missing"
    for path in corpus:
        with pytest.raises(PlanSourceError) as info:
            parse_plan(path.read_text(encoding="utf-8"))
        assert info.value.line >= 1 and info.value.column >= 1
        code = cli_main(
            ["check", str(path), str(bundled("shop_theft.json")), "--actor", "a"]
        )
        captured = capsys.readouterr()
        assert code == 1
        assert f"{path}:{info.value.line}:{info.value.column}" in captured.err
