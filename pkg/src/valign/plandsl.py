"""Surface syntax for action plans.

Grammar, one plan per document::

    document := plan
    plan     := "plan" IDENT "{"
                    "agent" IDENT ";"
                    "reasons" ":" pred ("," pred)* ";"
                    "action" ":" pred ";"
                "}"
    pred     := IDENT "(" IDENT ")"
    IDENT    := [A-Za-z_][A-Za-z0-9_]*

Whitespace separates tokens freely and CRLF input is accepted; the
canonical printer emits a single LF-terminated line. Parsing the printer's
output returns a plan equal to the original.

Validation rules beyond the grammar: the reasons list must be non-empty,
and every predicate must be applied to the declared agent variable (plans
never mention other agents). All errors carry a 1-based line and column.
"""

from __future__ import annotations

import re

from .errors import PlanSyntaxError, PlanValidationError
from .model import ACTION, REASON, ActionPlan, PredicateSymbol

_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[{}();:,]")
_SPACE = re.compile(r"\s+")

_PUNCT = set("{}();:,")


class _Token:
    __slots__ = ("value", "line", "column")

    def __init__(self, value: str, line: int, column: int) -> None:
        self.value = value
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        space = _SPACE.match(text, pos)
        if space:
            chunk = space.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = space.start() + chunk.rfind("\n") + 1
            pos = space.end()
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise PlanSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        tokens.append(_Token(match.group(), line, match.start() - line_start + 1))
        pos = match.end()
    tokens.append(_Token("", line, len(text) - line_start + 1))  # end marker
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str, token: _Token | None = None):
        token = token or self.peek()
        raise PlanSyntaxError(message, token.line, token.column)

    def expect(self, literal: str) -> _Token:
        token = self.peek()
        if token.value != literal:
            found = repr(token.value) if token.value else "end of input"
            self.fail(f"expected {literal!r}, found {found}", token)
        return self.advance()

    def expect_ident(self, what: str) -> _Token:
        token = self.peek()
        if not token.value or token.value in _PUNCT:
            found = repr(token.value) if token.value else "end of input"
            self.fail(f"expected {what}, found {found}", token)
        return self.advance()

    def parse_document(self) -> ActionPlan:
        self.expect("plan")
        name = self.expect_ident("plan name")
        self.expect("{")
        self.expect("agent")
        agent_var = self.expect_ident("agent variable")
        self.expect(";")

        self.expect("reasons")
        self.expect(":")
        if self.peek().value == ";":
            token = self.peek()
            raise PlanValidationError("empty reasons list", token.line, token.column)
        reasons = [self.parse_pred(agent_var.value, REASON)]
        while self.peek().value == ",":
            self.advance()
            reasons.append(self.parse_pred(agent_var.value, REASON))
        self.expect(";")

        self.expect("action")
        self.expect(":")
        action = self.parse_pred(agent_var.value, ACTION)
        self.expect(";")
        self.expect("}")

        trailing = self.peek()
        if trailing.value:
            self.fail(f"expected end of input, found {trailing.value!r}", trailing)

        return ActionPlan(name.value, agent_var.value, tuple(reasons), action)

    def parse_pred(self, agent_var: str, kind: str) -> PredicateSymbol:
        name = self.expect_ident("predicate name")
        self.expect("(")
        arg = self.expect_ident("agent variable")
        if arg.value != agent_var:
            raise PlanValidationError(
                f"predicate argument {arg.value!r} does not match the plan's "
                f"agent variable {agent_var!r}",
                arg.line,
                arg.column,
            )
        self.expect(")")
        return PredicateSymbol(name.value, kind)


def parse_plan(source: str) -> ActionPlan:
    """Parse one plan block; errors carry the offending line and column."""
    return _Parser(_tokenize(source)).parse_document()


def print_plan(plan: ActionPlan) -> str:
    """Canonical single-line rendering; ``parse_plan(print_plan(p)) == p``."""
    var = plan.agent_var
    reasons = ", ".join(f"{r.name}({var})" for r in plan.reasons)
    return (
        f"plan {plan.name} {{ agent {var}; "
        f"reasons: {reasons}; action: {plan.action.name}({var}); }}\n"
    )
