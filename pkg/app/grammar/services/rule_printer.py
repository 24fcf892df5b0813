# grammar/services/rule_printer.py
"""Canonical concrete syntax for parsed rules (used by --dump-ast and traces)."""

from typing import Iterable, List, Optional

from app.grammar.schemas.rule_types import (
    ActionItem, ConditionTerm, ConstraintKind, Edit, EditKind, FeatureConstraint,
    FlxCase, FlxSpec, Grammar, NodeSpec, RelationAction, RelationPattern, TRule,
)
from app.grammar.utils.constants import FLX


def render_constraint(constraint: FeatureConstraint) -> str:
    kind = constraint.kind
    if kind is ConstraintKind.ATTRIBUTE:
        return f"@{constraint.token}"
    if kind is ConstraintKind.NEGATED_ATTRIBUTE:
        return f"^@{constraint.token}"
    if kind is ConstraintKind.NEGATED_FEATURE:
        return f"^{constraint.token}"
    if kind is ConstraintKind.KEY_VALUE:
        return f"{constraint.key}={constraint.value}"
    if kind is ConstraintKind.DISJUNCTION:
        return '{' + ' '.join(constraint.members) + '}'
    return constraint.token


def render_spec(spec: NodeSpec) -> str:
    return ','.join(render_constraint(c) for c in spec.constraints)


def render_term(term: ConditionTerm) -> str:
    return ('^' if term.negated else '') + term.token


def render_case(case: FlxCase) -> str:
    condition = '&'.join(render_term(t) for t in case.condition)
    return f'{condition}:={case.op.strip}>"{case.op.append}"'


def render_flx(spec: FlxSpec) -> str:
    return '; '.join(render_case(case) for case in spec.cases)


def render_edit(edit: Edit) -> str:
    kind = edit.kind
    if kind is EditKind.ADD_FEATURE:
        return f"+{edit.token}"
    if kind is EditKind.REMOVE_FEATURE:
        return f"-{edit.token}"
    if kind is EditKind.ADD_ATTRIBUTE:
        return f"+@{edit.token}"
    if kind is EditKind.REMOVE_ATTRIBUTE:
        return f"-@{edit.token}"
    if kind is EditKind.SET_KEY:
        return f"+{edit.key}={edit.value}"
    if kind is EditKind.CLEAR_KEY:
        return f"-{edit.key}={edit.value}"
    if kind is EditKind.ATTACH_FLX:
        return f"+{FLX}({render_flx(edit.flx)})"
    return f"!{FLX}"


def _render_edits(variable: Optional[str], edits: Iterable[Edit]) -> str:
    parts: List[str] = [variable] if variable else []
    parts.extend(render_edit(edit) for edit in edits)
    return ','.join(parts)


def render_item(item: ActionItem) -> str:
    if item.is_literal:
        return f'("{item.literal}")'
    return f"({_render_edits(item.variable, item.edits)})"


def render_pattern(pattern) -> str:
    if isinstance(pattern, RelationPattern):
        return f"{pattern.label}({render_spec(pattern.source)};{render_spec(pattern.target)})"
    return f"({render_spec(pattern.spec)})"


def render_action(action) -> str:
    if isinstance(action, RelationAction):
        source = _render_edits(action.source_variable, action.source_edits)
        target = _render_edits(action.target_variable, action.target_edits)
        return f"{action.label}({source};{target})"
    return ''.join(render_item(item) for item in action.items)


def render_rule(rule: TRule) -> str:
    return f"{render_pattern(rule.pattern)}:={render_action(rule.action)};"


def render_grammar(grammar: Grammar) -> str:
    return ''.join(f"r{rule.index}\t{render_rule(rule)}\n" for rule in grammar.trules)
