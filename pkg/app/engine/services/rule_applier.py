# engine/services/rule_applier.py
"""
Matching a rule at a site and applying its action.

A site is either a relation (for relation patterns) or a node (for node
patterns). Sites are listed in relation order, or in segment order for nodes.
Applying a rule never mutates the input state; a firing that leaves the state
unchanged counts as no match.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from app.engine.schemas.state_types import GenNode, GenRelation, GenState, TraceEvent
from app.engine.services.matcher import match_node
from app.engine.utils.constants import LITERAL_ID_PREFIX
from app.grammar.schemas.rule_types import (
    Edit, EditKind, NodeSeqPattern, RelationAction, RelationPattern, SequenceAction, TRule,
)
from app.grammar.services.rule_printer import render_rule
from app.grammar.utils.constants import FLX
from app.morphology.schemas.inflection_types import InflectionOutcome
from app.morphology.services.inflector import inflect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Site:
    relation: Optional[int] = None
    node: Optional[int] = None


def candidate_sites(state: GenState, rule: TRule) -> List[Site]:
    """List the places a rule could fire, in scan order.

    Relation rules look at every relation carrying the pattern label, in list order.
    Node rules look at every node, segment by segment, left to right.
    """
    if isinstance(rule.pattern, RelationPattern):
        return [Site(relation=index) for index, relation in enumerate(state.relations)
                if relation.label == rule.pattern.label]
    return [Site(node=uid) for segment in state.segments for uid in segment]


def describe_site(state: GenState, site: Site) -> str:
    """Render a site for trace output."""
    if site.relation is not None:
        return state.render_relation(state.relations[site.relation])
    return f"[{state.nodes[site.node].render()}]"


def match_site(state: GenState, rule: TRule, site: Site) -> Optional[Dict[str, int]]:
    """Variable bindings when the rule's pattern holds at ``site``."""
    pattern = rule.pattern
    if isinstance(pattern, RelationPattern):
        relation = state.relations[site.relation]
        if relation.label != pattern.label:
            return None
        source, target = state.nodes[relation.source], state.nodes[relation.target]
        if not (match_node(pattern.source, source) and match_node(pattern.target, target)):
            return None
        bindings = {}
        if pattern.source.binding:
            bindings[pattern.source.binding] = relation.source
        if pattern.target.binding:
            bindings[pattern.target.binding] = relation.target
        return bindings
    node = state.nodes[site.node]
    if not match_node(pattern.spec, node):
        return None
    return {pattern.spec.binding: site.node} if pattern.spec.binding else {}


def apply_edits(state: GenState, uid: int, edits: Sequence[Edit], inflections: List[InflectionOutcome]):
    """Apply feature and attribute edits to one node in place.

    Args:
        state: State being rewritten; the node is replaced when it inflects.
        uid: Node to edit.
        edits: Edits in written order.
        inflections: Collects an outcome for every executed inflection.
    """
    node = state.nodes[uid]
    for edit in edits:
        kind = edit.kind
        if kind is EditKind.ADD_FEATURE:
            node.add_feature(edit.token)
        elif kind is EditKind.REMOVE_FEATURE:
            node.remove_feature(edit.token)
        elif kind is EditKind.ADD_ATTRIBUTE:
            node.add_attr(edit.token)
        elif kind is EditKind.REMOVE_ATTRIBUTE:
            node.remove_attr(edit.token)
        elif kind is EditKind.SET_KEY:
            node.kv[edit.key] = edit.value
        elif kind is EditKind.CLEAR_KEY:
            if node.kv.get(edit.key) == edit.value:
                del node.kv[edit.key]
        elif kind is EditKind.ATTACH_FLX:
            node.pending_flx = edit.flx
            node.add_feature(FLX)
        elif kind is EditKind.EXECUTE_FLX and node.pending_flx is not None:
            node, outcome = inflect(node)
            state.nodes[uid] = node
            inflections.append(outcome)


def _new_literal(state: GenState, text: str) -> int:
    uid = state.next_uid
    state.nodes[uid] = GenNode(uid=uid, surface=text, label=f"{LITERAL_ID_PREFIX}{state.next_literal:02d}")
    state.next_uid += 1
    state.next_literal += 1
    return uid


def _apply_relation_action(state: GenState, relation_index: int, action: RelationAction,
                           bindings: Dict[str, int], inflections: List[InflectionOutcome]):
    relation = state.relations[relation_index]
    source = bindings[action.source_variable] if action.source_variable else relation.source
    target = bindings[action.target_variable] if action.target_variable else relation.target
    apply_edits(state, source, action.source_edits, inflections)
    apply_edits(state, target, action.target_edits, inflections)
    if action.label != relation.label:
        state.relations[relation_index] = GenRelation(action.label, relation.source, relation.target)


def _resolve_items(state: GenState, action: SequenceAction, bindings: Dict[str, int],
                   inflections: List[InflectionOutcome]) -> List[Tuple[bool, int]]:
    """(is_literal, uid) per action item, with literals created and edits applied."""
    resolved = []
    for item in action.items:
        if item.is_literal:
            resolved.append((True, _new_literal(state, item.literal)))
        else:
            uid = bindings[item.variable]
            apply_edits(state, uid, item.edits, inflections)
            resolved.append((False, uid))
    return resolved


def _merge_relation_segments(state: GenState, relation_index: int, resolved: List[Tuple[bool, int]]):
    state.relations.pop(relation_index)
    merged: List[int] = []
    consumed: List[int] = []
    for is_literal, uid in resolved:
        if is_literal:
            merged.append(uid)
            continue
        index = state.segment_index(uid)
        if index not in consumed:
            consumed.append(index)
            merged.extend(state.segments[index])
    position = min(consumed) if consumed else len(state.segments)
    state.segments = [segment for index, segment in enumerate(state.segments) if index not in consumed]
    state.segments.insert(position, merged)


def _replace_node(state: GenState, uid: int, resolved: List[Tuple[bool, int]]):
    index = state.segment_index(uid)
    segment = state.segments[index]
    position = segment.index(uid)
    replacement = [item_uid for _, item_uid in resolved]
    segment[position:position + 1] = replacement
    if uid not in replacement:
        logger.debug("Node %s dropped by a sequence action", state.nodes[uid].render())
        del state.nodes[uid]
        state.relations = [r for r in state.relations if uid not in (r.source, r.target)]
    if not segment:
        del state.segments[index]


def apply_rule(state: GenState, rule: TRule, site: Site, step: int = 0) -> Optional[Tuple[GenState, TraceEvent]]:
    """Fire ``rule`` at ``site`` on a copy of ``state``.

    Returns:
        The rewritten state and its trace event, or None when the pattern does
        not hold at the site. The input state is left untouched.
    """
    bindings = match_site(state, rule, site)
    if bindings is None:
        return None

    new_state = state.copy()
    inflections: List[InflectionOutcome] = []
    if isinstance(rule.action, RelationAction):
        _apply_relation_action(new_state, site.relation, rule.action, bindings, inflections)
    else:
        resolved = _resolve_items(new_state, rule.action, bindings, inflections)
        if isinstance(rule.pattern, NodeSeqPattern):
            _replace_node(new_state, site.node, resolved)
        else:
            _merge_relation_segments(new_state, site.relation, resolved)

    before_print, after_print = state.fingerprint(), new_state.fingerprint()
    if before_print == after_print:
        return None

    event = TraceEvent(
        step=step,
        rule_index=rule.index,
        rule_text=' '.join(rule.text.split('\n')) if rule.text else render_rule(rule),
        site=describe_site(state, site),
        before=state.render(),
        after=new_state.render(),
        before_hash=hash(before_print),
        after_hash=hash(after_print),
        inflections=tuple(inflections),
    )
    return new_state, event
