# grammar/schemas/rule_types.py
"""
Abstract syntax of the transformation-rule language.

All types are frozen so grammars can be shared between concurrent runs and
compared structurally.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

from app.diagnostics import Diagnostic


class ConstraintKind(str, Enum):
    FEATURE = 'feature'
    ATTRIBUTE = 'attribute'
    KEY_VALUE = 'key-value'
    DISJUNCTION = 'disjunction'
    NEGATED_FEATURE = 'negated-feature'
    NEGATED_ATTRIBUTE = 'negated-attribute'
    VARIABLE = 'variable'


@dataclass(frozen=True)
class FeatureConstraint:
    kind: ConstraintKind
    token: str = ''
    members: Tuple[str, ...] = ()
    key: str = ''
    value: str = ''


@dataclass(frozen=True)
class NodeSpec:
    constraints: Tuple[FeatureConstraint, ...] = ()

    @property
    def binding(self) -> Optional[str]:
        for constraint in self.constraints:
            if constraint.kind is ConstraintKind.VARIABLE:
                return constraint.token
        return None

    @property
    def conditions(self) -> Tuple[FeatureConstraint, ...]:
        return tuple(c for c in self.constraints if c.kind is not ConstraintKind.VARIABLE)


@dataclass(frozen=True)
class ConditionTerm:
    token: str
    negated: bool = False


@dataclass(frozen=True)
class AffixOp:
    strip: int = 0
    append: str = ''


@dataclass(frozen=True)
class FlxCase:
    condition: Tuple[ConditionTerm, ...]
    op: AffixOp


@dataclass(frozen=True)
class FlxSpec:
    cases: Tuple[FlxCase, ...]


class EditKind(str, Enum):
    ADD_FEATURE = 'add-feature'
    REMOVE_FEATURE = 'remove-feature'
    ADD_ATTRIBUTE = 'add-attribute'
    REMOVE_ATTRIBUTE = 'remove-attribute'
    SET_KEY = 'set-key'
    CLEAR_KEY = 'clear-key'
    ATTACH_FLX = 'attach-flx'
    EXECUTE_FLX = 'execute-flx'


@dataclass(frozen=True)
class Edit:
    kind: EditKind
    token: str = ''
    key: str = ''
    value: str = ''
    flx: Optional[FlxSpec] = None


@dataclass(frozen=True)
class RelationPattern:
    label: str
    source: NodeSpec
    target: NodeSpec


@dataclass(frozen=True)
class NodeSeqPattern:
    spec: NodeSpec


@dataclass(frozen=True)
class RelationAction:
    label: str
    source_variable: Optional[str]
    source_edits: Tuple[Edit, ...]
    target_variable: Optional[str]
    target_edits: Tuple[Edit, ...]


@dataclass(frozen=True)
class ActionItem:
    """One parenthesised item of a sequence action: a literal or a bound node with edits."""
    variable: Optional[str] = None
    edits: Tuple[Edit, ...] = ()
    literal: Optional[str] = None

    @property
    def is_literal(self) -> bool:
        return self.literal is not None


@dataclass(frozen=True)
class SequenceAction:
    items: Tuple[ActionItem, ...]


Pattern = Union[RelationPattern, NodeSeqPattern]
Action = Union[RelationAction, SequenceAction]


@dataclass(frozen=True)
class TRule:
    index: int
    pattern: Pattern
    action: Action
    text: str = field(default='', compare=False)
    line: Optional[int] = field(default=None, compare=False)

    @property
    def pattern_variables(self) -> Tuple[str, ...]:
        if isinstance(self.pattern, RelationPattern):
            specs = (self.pattern.source, self.pattern.target)
        else:
            specs = (self.pattern.spec,)
        return tuple(spec.binding for spec in specs if spec.binding)

    @property
    def action_variables(self) -> Tuple[str, ...]:
        if isinstance(self.action, RelationAction):
            found = (self.action.source_variable, self.action.target_variable)
        else:
            found = tuple(item.variable for item in self.action.items)
        return tuple(v for v in found if v)


@dataclass(frozen=True)
class Grammar:
    trules: Tuple[TRule, ...] = ()
    drules: Tuple[str, ...] = ()
    diagnostics: Tuple[Diagnostic, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.trules)
