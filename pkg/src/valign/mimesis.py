"""Preference and poll ingestion for the hybrid evaluation pipeline.

Aggregated human responses enter the system here, and they enter only as
empirical premises: poll majorities update an agent's belief base, and
ranked ballots produce scores. Nothing in this module can set a principle
verdict directly; that separation is structural, not just convention.
Polls and ballots approximate what people believe or prefer, never what is
right.
"""

from __future__ import annotations

import csv
import json
import warnings
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import EmptyBeliefBaseWarning, InputError, ModelError
from .fallacy import Argument, LintResult, LintVerdict, Statement, lint_argument
from .model import AgentId, GroundAtom, Scenario, parse_ground_atom


@dataclass(frozen=True)
class Ballot:
    """A ranking over all candidates, cast by ``count`` identical voters."""

    ranking: tuple[str, ...]
    count: int


@dataclass(frozen=True)
class PreferenceProfile:
    candidates: tuple[str, ...]
    ballots: tuple[Ballot, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "ballots", tuple(self.ballots))
        if not self.candidates:
            raise InputError("a preference profile needs at least one candidate")
        if len(set(self.candidates)) != len(self.candidates):
            raise InputError("duplicate candidates in profile")
        reference = set(self.candidates)
        for ballot in self.ballots:
            if ballot.count < 1:
                raise InputError(f"ballot count must be positive, got {ballot.count}")
            if len(set(ballot.ranking)) != len(ballot.ranking) or set(
                ballot.ranking
            ) != reference:
                raise InputError(
                    f"ranking {ballot.ranking!r} is not a permutation of the candidates"
                )


@dataclass(frozen=True)
class Poll:
    """Yes/no responses about one ground atom."""

    proposition: GroundAtom
    yes: int
    no: int

    def __post_init__(self) -> None:
        for count in (self.yes, self.no):
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise InputError(f"poll counts must be non-negative integers, got {count!r}")


class PremiseEstimate(Enum):
    TRUE = "True"
    FALSE = "False"
    INDETERMINATE = "Indeterminate"


def borda_count(profile: PreferenceProfile) -> tuple[dict[str, int], set[str]]:
    """Positional scores and the argmax winner set.

    Each ballot awards k-1, k-2, ..., 0 points down its ranking (k the
    number of candidates), weighted by the ballot count. Scores are keyed
    in candidate declaration order.
    """
    k = len(profile.candidates)
    scores = {candidate: 0 for candidate in profile.candidates}
    for ballot in profile.ballots:
        for position, candidate in enumerate(ballot.ranking):
            scores[candidate] += (k - 1 - position) * ballot.count
    top = max(scores.values())
    winners = {candidate for candidate, score in scores.items() if score == top}
    return scores, winners


def estimate_premise(poll: Poll, threshold: float = 0.5) -> PremiseEstimate:
    """Turn a poll into a truth estimate for its proposition.

    True when the yes fraction strictly exceeds the threshold, False when
    the no fraction does, Indeterminate otherwise; exact ties under the
    default strict majority stay Indeterminate. With a threshold below 0.5
    both fractions can clear it at once, which is also Indeterminate.
    """
    if not 0 < threshold <= 1:
        raise InputError(f"threshold must be in (0, 1], got {threshold!r}")
    responses = poll.yes + poll.no
    if responses == 0:
        raise InputError("empty poll: no responses to estimate from")
    yes_clears = poll.yes / responses > threshold
    no_clears = poll.no / responses > threshold
    if yes_clears and not no_clears:
        return PremiseEstimate.TRUE
    if no_clears and not yes_clears:
        return PremiseEstimate.FALSE
    return PremiseEstimate.INDETERMINATE


def apply_premise(
    scenario: Scenario,
    actor: AgentId,
    estimate: PremiseEstimate,
    proposition: GroundAtom,
) -> Scenario:
    """Fold an estimated premise into an agent's belief base.

    A True estimate keeps only believed worlds where the proposition's atom
    is true, False keeps the atom-false worlds, and Indeterminate returns
    the scenario unchanged. Beliefs only ever shrink. If the restriction
    empties the belief base, an EmptyBeliefBaseWarning is issued and the
    emptied scenario is still returned; generalization checks on it will
    come back Indeterminate.
    """
    predicate, subject = proposition
    if scenario.predicate(predicate) is None:
        raise ModelError(f"proposition predicate {predicate!r} is not declared")
    if subject not in scenario.agents:
        raise ModelError(f"proposition agent {subject!r} is not declared")
    if actor not in scenario.agents:
        raise ModelError(f"unknown agent {actor!r}")
    if estimate is PremiseEstimate.INDETERMINATE:
        return scenario
    want = estimate is PremiseEstimate.TRUE
    kept = tuple(
        world_id
        for world_id in scenario.beliefs_of(actor)
        if scenario.world(world_id).atoms[(predicate, subject)] == want
    )
    if not kept and scenario.beliefs_of(actor):
        warnings.warn(
            f"premise {predicate}({subject})={estimate.value} contradicts every "
            f"world {actor!r} believed; belief base is now empty",
            EmptyBeliefBaseWarning,
            stacklevel=2,
        )
    return scenario.with_beliefs(actor, kept)


def lint_aggregation_argument(
    profile: PreferenceProfile,
    normative_premise_present: bool,
    normative_conclusion: bool = True,
) -> LintResult:
    """Lint the argument from an aggregation result to a conclusion.

    The argument always opens with the descriptive premise that the ballots
    award some option the highest point total. Drawing a normative
    conclusion from that alone is the fallacy; adding the bridge premise
    that the highest-scoring option is the right choice makes the argument
    well-formed, but the result is annotated with the caveat that the
    bridge premise is itself a contestable normative claim, not a finding
    of the ballots. With ``normative_conclusion=False`` the conclusion
    merely restates the score outcome and nothing is flagged.
    """
    scores, winners = borda_count(profile)
    ordered_winners = [c for c in profile.candidates if c in winners]
    top = ", ".join(ordered_winners)

    premises = [
        Statement(
            f"Aggregated ballots award the highest point total to {top}",
            normative=False,
        )
    ]
    if normative_premise_present:
        premises.append(
            Statement(
                "The option with the highest point total is the right thing to do",
                normative=True,
            )
        )
    if normative_conclusion:
        conclusion = Statement(f"{top} is the right thing to do", normative=True)
    else:
        conclusion = Statement(f"{top} received the highest point total", normative=False)

    result = lint_argument(Argument(tuple(premises), conclusion, True))
    if (
        result.verdict is LintVerdict.NO_FALLACY
        and normative_premise_present
        and normative_conclusion
    ):
        result = LintResult(
            result.verdict,
            result.explanation
            + "; caveat: the bridge premise equating the aggregate winner with "
            "the right choice is itself a contestable normative claim, not a "
            "finding of the ballots",
        )
    return result


def load_ballots(path) -> PreferenceProfile:
    """Load ranked ballots from CSV with header ``count,rank1,rank2,...``.

    Each data row gives a voter count followed by a full ranking; the first
    row's ranking fixes the candidate order and every other row must rank
    exactly the same candidates.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        rows = [row for row in csv.reader(handle) if row]
    if not rows:
        raise InputError(f"{path}: empty ballot file")
    header = rows[0]
    if len(header) < 2 or header[0].strip() != "count":
        raise InputError(
            f"{path}: ballot header must be count,rank1,rank2,..., got {header!r}"
        )
    for position, column in enumerate(header[1:], start=1):
        if column.strip() != f"rank{position}":
            raise InputError(
                f"{path}: ballot header must be count,rank1,rank2,..., got {header!r}"
            )
    if len(rows) == 1:
        raise InputError(f"{path}: ballot file has no data rows")

    ballots = []
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise InputError(
                f"{path}: row {line_no} has {len(row)} fields, expected {len(header)}"
            )
        try:
            count = int(row[0])
        except ValueError:
            raise InputError(
                f"{path}: row {line_no}: count {row[0]!r} is not an integer"
            ) from None
        ranking = tuple(cell.strip() for cell in row[1:])
        if any(not cell for cell in ranking):
            raise InputError(f"{path}: row {line_no} has an empty candidate name")
        ballots.append(Ballot(ranking, count))

    candidates = ballots[0].ranking
    return PreferenceProfile(candidates, tuple(ballots))


def poll_from_dict(data) -> Poll:
    if not isinstance(data, dict):
        raise InputError("poll document must be a JSON object")
    proposition = data.get("proposition")
    if not isinstance(proposition, str):
        raise InputError("poll document needs a proposition string like pred(agent)")
    yes = data.get("yes")
    no = data.get("no")
    return Poll(parse_ground_atom(proposition), yes, no)


def load_poll(path) -> Poll:
    """Load a poll from JSON: ``proposition`` (``"pred(agent)"``), ``yes``
    and ``no`` response counts."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return poll_from_dict(data)
