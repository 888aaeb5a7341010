"""Lint argument structures for is/ought slippage.

The rule enforced here: a normative conclusion that is fully grounded by
its premise set requires at least one normative premise. Its contrapositive
drives the verdicts: when every premise is descriptive, either the
conclusion carries no normative element, or whatever normative element it
carries is groundless and the argument cannot advance a normative inquiry.

Normativity and grounding are caller-supplied annotations. This module does
no natural-language classification and no entailment proving; deciding
whether a sentence is action-guiding, or whether a premise set grounds a
conclusion, is the caller's problem.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import InputError


class LintVerdict(Enum):
    NO_FALLACY = "NoFallacy"
    FALLACY_DETECTED = "FallacyDetected"
    GROUNDLESS_NORMATIVE_ELEMENT = "GroundlessNormativeElement"


@dataclass(frozen=True)
class Statement:
    """A sentence tagged as normative (action-guiding) or descriptive."""

    text: str
    normative: bool


@dataclass(frozen=True)
class Argument:
    """Premises, a conclusion, and grounding annotations.

    ``conclusion_grounded`` asserts the conclusion is fully supported by the
    premise set. ``normative_disjunct_grounded`` only applies to disjunctive
    conclusions that carry a normative disjunct: it says whether that
    disjunct in particular is grounded. Leave it None when the conclusion
    has no such component.
    """

    premises: tuple[Statement, ...]
    conclusion: Statement
    conclusion_grounded: bool
    normative_disjunct_grounded: bool | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))
        if not self.premises and self.conclusion_grounded:
            raise InputError(
                "an argument with no premises cannot have a grounded conclusion"
            )


@dataclass(frozen=True)
class LintResult:
    verdict: LintVerdict
    explanation: str


def lint_argument(arg: Argument) -> LintResult:
    """Classify an argument against the is/ought schema.

    With at least one normative premise the schema is satisfied and nothing
    is flagged. With purely descriptive premises: a grounded normative
    conclusion is the fallacy; an ungrounded normative conclusion, or an
    ungrounded normative disjunct inside a descriptive conclusion, is a
    groundless normative element.
    """
    if any(p.normative for p in arg.premises):
        return LintResult(
            LintVerdict.NO_FALLACY,
            "the premise set contains a normative statement, so a normative "
            "conclusion can be grounded",
        )
    if arg.conclusion.normative:
        if arg.conclusion_grounded:
            return LintResult(
                LintVerdict.FALLACY_DETECTED,
                f"conclusion {arg.conclusion.text!r} is normative and grounded, "
                "but every premise is descriptive",
            )
        return LintResult(
            LintVerdict.GROUNDLESS_NORMATIVE_ELEMENT,
            f"conclusion {arg.conclusion.text!r} is normative but not grounded "
            "by the premise set; the argument cannot advance a normative inquiry",
        )
    if arg.normative_disjunct_grounded is False:
        return LintResult(
            LintVerdict.GROUNDLESS_NORMATIVE_ELEMENT,
            f"conclusion {arg.conclusion.text!r} carries a normative disjunct "
            "that no premise grounds",
        )
    return LintResult(
        LintVerdict.NO_FALLACY,
        "no grounded normative element rests on purely descriptive premises",
    )


def _statement_from_dict(entry, what: str) -> Statement:
    if not isinstance(entry, dict):
        raise InputError(f"{what} must be an object with text and normative keys")
    text = entry.get("text")
    normative = entry.get("normative")
    if not isinstance(text, str):
        raise InputError(f"{what}: text must be a string")
    if not isinstance(normative, bool):
        raise InputError(f"{what}: normative must be true or false")
    return Statement(text, normative)


def argument_from_dict(data) -> Argument:
    if not isinstance(data, dict):
        raise InputError("argument document must be a JSON object")
    raw_premises = data.get("premises")
    if not isinstance(raw_premises, list):
        raise InputError("argument document needs a premises[] list")
    premises = tuple(
        _statement_from_dict(entry, f"premise {i + 1}")
        for i, entry in enumerate(raw_premises)
    )
    conclusion = _statement_from_dict(data.get("conclusion"), "conclusion")
    grounded = data.get("grounded")
    if not isinstance(grounded, bool):
        raise InputError("argument document: grounded must be true or false")
    disjunct = data.get("normative_disjunct_grounded")
    if disjunct is not None and not isinstance(disjunct, bool):
        raise InputError(
            "argument document: normative_disjunct_grounded must be true, false or absent"
        )
    return Argument(premises, conclusion, grounded, disjunct)


def load_argument(path) -> Argument:
    """Load an argument from JSON: ``premises`` (list of ``{"text", "normative"}``),
    ``conclusion`` (same shape), ``grounded``, and optionally
    ``normative_disjunct_grounded``."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return argument_from_dict(data)
