# grammar/services/grammar_linter.py
"""Static checks over a parsed grammar and the dictionary it serves."""

import logging
import re
from typing import List, Optional, Set, Tuple

from django.conf import settings

from app.diagnostics import Diagnostic
from app.grammar.schemas.rule_types import (
    ConstraintKind, Edit, EditKind, FlxSpec, Grammar, NodeSeqPattern, NodeSpec,
    RelationAction, RelationPattern, SequenceAction, TRule,
)
from app.grammar.services.rule_printer import render_case
from app.grammar.utils.constants import (
    NO_OP_RULE, SHADOWED_CASE, UNUSED_PARADIGM_TAG, UNUSED_VARIABLE,
)
from app.lexicon.schemas.lexicon_types import Lexicon

logger = logging.getLogger(__name__)


def shadowed_cases(spec: FlxSpec) -> List[Tuple[int, int]]:
    """(shadowed, shadowing) case indices: an earlier case whose terms are a
    subset of a later case's terms always wins over it."""
    found = []
    for later, case in enumerate(spec.cases):
        terms = set(case.condition)
        for earlier in range(later):
            if set(spec.cases[earlier].condition) <= terms:
                found.append((later, earlier))
                break
    return found


def _edit_is_inert(edit: Edit, spec: NodeSpec) -> bool:
    for constraint in spec.conditions:
        if edit.kind is EditKind.ADD_ATTRIBUTE and constraint.kind is ConstraintKind.ATTRIBUTE \
                and constraint.token == edit.token:
            return True
        if edit.kind is EditKind.REMOVE_ATTRIBUTE and constraint.kind is ConstraintKind.NEGATED_ATTRIBUTE \
                and constraint.token == edit.token:
            return True
    return False


def is_noop_rule(rule: TRule) -> bool:
    pattern, action = rule.pattern, rule.action
    if isinstance(pattern, NodeSeqPattern) and isinstance(action, SequenceAction):
        if len(action.items) != 1 or action.items[0].is_literal:
            return False
        item = action.items[0]
        return item.variable == pattern.spec.binding and all(_edit_is_inert(e, pattern.spec) for e in item.edits)
    if isinstance(pattern, RelationPattern) and isinstance(action, RelationAction):
        if action.label != pattern.label:
            return False
        return all(_edit_is_inert(e, pattern.source) for e in action.source_edits) and \
            all(_edit_is_inert(e, pattern.target) for e in action.target_edits)
    return False


def _attached_specs(rule: TRule) -> List[FlxSpec]:
    if isinstance(rule.action, RelationAction):
        edits = rule.action.source_edits + rule.action.target_edits
    else:
        edits = tuple(e for item in rule.action.items for e in item.edits)
    return [edit.flx for edit in edits if edit.kind is EditKind.ATTACH_FLX]


def _node_pattern_tokens(grammar: Grammar) -> Set[str]:
    tokens: Set[str] = set()
    for rule in grammar.trules:
        if not isinstance(rule.pattern, NodeSeqPattern):
            continue
        for constraint in rule.pattern.spec.conditions:
            if constraint.kind is ConstraintKind.FEATURE:
                tokens.add(constraint.token)
            elif constraint.kind is ConstraintKind.DISJUNCTION:
                tokens.update(constraint.members)
    return tokens


class GrammarLinter:
    def __init__(self, paradigm_pattern: Optional[str] = None):
        self.paradigm_pattern = re.compile(paradigm_pattern or settings.PARADIGM_TAG_PATTERN)

    def unused_paradigm_tags(self, grammar: Grammar, lexicon: Lexicon) -> List[Diagnostic]:
        covered = _node_pattern_tokens(grammar)
        diagnostics, reported = [], set()
        for entry in lexicon.all_entries():
            for feature in entry.bare_features:
                if self.paradigm_pattern.match(feature) and feature not in covered and feature not in reported:
                    reported.add(feature)
                    diagnostics.append(Diagnostic(
                        UNUSED_PARADIGM_TAG,
                        f"paradigm tag {feature} on [{entry.lemma}] is not matched by any node rule",
                        line=entry.line,
                        subject=feature,
                    ))
        return diagnostics

    def rule_diagnostics(self, rule: TRule) -> List[Diagnostic]:
        diagnostics = []
        if is_noop_rule(rule):
            diagnostics.append(Diagnostic(
                NO_OP_RULE, f"r{rule.index} never changes the state", line=rule.line, subject=f"r{rule.index}",
            ))
        for spec in _attached_specs(rule):
            for later, earlier in shadowed_cases(spec):
                diagnostics.append(Diagnostic(
                    SHADOWED_CASE,
                    f"r{rule.index}: case {later} ({render_case(spec.cases[later])}) is unreachable "
                    f"after case {earlier} ({render_case(spec.cases[earlier])})",
                    line=rule.line,
                    subject=f"case {later}",
                ))
        used = set(rule.action_variables)
        for variable in rule.pattern_variables:
            if variable not in used:
                diagnostics.append(Diagnostic(
                    UNUSED_VARIABLE,
                    f"r{rule.index} binds {variable} but its action never uses it",
                    line=rule.line,
                    subject=variable,
                ))
        return diagnostics

    def lint(self, grammar: Grammar, lexicon: Lexicon) -> List[Diagnostic]:
        diagnostics = list(grammar.diagnostics)
        diagnostics.extend(self.unused_paradigm_tags(grammar, lexicon))
        for rule in grammar.trules:
            diagnostics.extend(self.rule_diagnostics(rule))
        logger.info("Lint found %d diagnostics over %d rules", len(diagnostics), len(grammar.trules))
        return diagnostics


def lint_grammar(grammar: Grammar, lexicon: Lexicon, paradigm_pattern: Optional[str] = None) -> List[Diagnostic]:
    return GrammarLinter(paradigm_pattern).lint(grammar, lexicon)
