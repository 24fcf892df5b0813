# morphology/services/inflector.py
"""
FLX paradigm evaluation.

Cases are tried in declaration order and the first whose condition holds is
applied to the right edge of the surface. Characters are Unicode scalar values,
so a Gurmukhi vowel sign counts as one character.
"""

import logging
from typing import Optional, Sequence, Tuple

from app.engine.schemas.state_types import GenNode
from app.exceptions import StripTooLongError
from app.grammar.schemas.rule_types import AffixOp, ConditionTerm, FlxSpec
from app.grammar.utils.constants import INFLECTED
from app.morphology.schemas.inflection_types import InflectionOutcome

logger = logging.getLogger(__name__)


def eval_condition(condition: Sequence[ConditionTerm], node: GenNode) -> bool:
    return all(node.holds(term.token) != term.negated for term in condition)


def apply_affix(surface: str, op: AffixOp) -> str:
    if op.strip > len(surface):
        raise StripTooLongError(surface, op.strip)
    stem = surface[:len(surface) - op.strip] if op.strip else surface
    return stem + op.append


def select_case(spec: FlxSpec, node: GenNode) -> Optional[int]:
    for index, case in enumerate(spec.cases):
        if eval_condition(case.condition, node):
            return index
    return None


def inflect(node: GenNode) -> Tuple[GenNode, InflectionOutcome]:
    """Apply the node's pending paradigm; returns an updated copy."""
    if node.pending_flx is None:
        raise ValueError(f"{node.render()} has no pending paradigm")

    result = node.copy()
    matched = select_case(node.pending_flx, node)
    if matched is not None:
        result.surface = apply_affix(node.surface, node.pending_flx.cases[matched].op)
    result.pending_flx = None
    result.add_feature(INFLECTED)

    outcome = InflectionOutcome(matched, node.surface, result.surface, node=node.render())
    logger.debug("%s", outcome.describe())
    return result, outcome
