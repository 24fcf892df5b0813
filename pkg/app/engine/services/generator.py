# engine/services/generator.py
"""
Deconversion: UNL document -> surface sentence.

init_state looks every node up in the dictionary, run rewrites the state to a
fixpoint (rules in file order, first changing site wins, restart after each
firing) and linearize concatenates the final segments.
"""

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from django.conf import settings

from app.diagnostics import ERROR, Diagnostic
from app.engine.schemas.state_types import EngineCaps, GenNode, GenRelation, GenState, TraceEvent
from app.engine.services.rule_applier import apply_rule, candidate_sites, describe_site
from app.engine.services.tracer import GenerationTracer
from app.engine.utils.constants import FIRING_CAP, STRIP_TOO_LONG, UNKNOWN_UW, UNRESOLVED_RELATIONS
from app.exceptions import FiringCapExceeded, StripTooLongError
from app.grammar.schemas.rule_types import Grammar
from app.lexicon.schemas.lexicon_types import Lexicon
from app.lexicon.services.lookup import lookup
from app.unl_core.schemas.unl_types import UNLDocument

logger = logging.getLogger(__name__)

WHITESPACE_RUN = re.compile(r'\s+')
SEGMENT_SEPARATOR = ' '


@dataclass
class RunResult:
    state: GenState
    events: List[TraceEvent]
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def firing_count(self) -> int:
        return len(self.events)


@dataclass
class GenerationResult:
    text: str
    trace: List[TraceEvent] = field(default_factory=list)
    trace_lines: List[str] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)
    firing_count: int = 0
    complete: bool = True

    @property
    def rule_sequence(self) -> List[int]:
        return [event.rule_index for event in self.trace]


def init_state(doc: UNLDocument, lexicon: Lexicon) -> Tuple[GenState, List[Diagnostic]]:
    state = GenState()
    diagnostics: List[Diagnostic] = []
    uids = {}
    for node in doc.nodes:
        entries = lookup(lexicon, node.uw, node.attrs)
        uid = state.next_uid
        if entries:
            entry = entries[0]
            gen_node = GenNode(
                uid=uid,
                surface=entry.lemma,
                origin=node.key,
                features=list(entry.bare_features),
                attrs=list(node.attrs),
                kv=entry.key_values,
                label=node.instance_id or node.uw,
            )
        else:
            logger.warning("No dictionary entry for '%s'; using the headword as surface", node.uw)
            diagnostics.append(Diagnostic(UNKNOWN_UW, f"no dictionary entry for '{node.uw}'", subject=node.uw))
            gen_node = GenNode(uid=uid, surface=node.uw, origin=node.key, attrs=list(node.attrs),
                               label=node.instance_id or node.uw)
        state.nodes[uid] = gen_node
        state.segments.append([uid])
        uids[node.key] = uid
        state.next_uid += 1

    state.relations = [
        GenRelation(relation.label, uids[relation.source.key], uids[relation.target.key])
        for relation in doc.relations
    ]
    state.next_literal = len(state.nodes)
    return state, diagnostics


def _next_firing(state: GenState, grammar: Grammar, tracer: GenerationTracer, step: int):
    for rule in grammar.trules:
        for site in candidate_sites(state, rule):
            firing = apply_rule(state, rule, site, step)
            if firing is not None:
                return firing
            tracer.miss(rule.index, describe_site(state, site))
    return None


def run(state: GenState, grammar: Grammar, caps: EngineCaps,
        tracer: Optional[GenerationTracer] = None) -> RunResult:
    tracer = tracer or GenerationTracer(caps.trace_level)
    events: List[TraceEvent] = []
    while True:
        firing = _next_firing(state, grammar, tracer, len(events) + 1)
        if firing is None:
            break
        if len(events) >= caps.max_firings:
            tracer.phase(f"stopped: firing cap of {caps.max_firings} reached")
            raise FiringCapExceeded(len(events), state=state, trace=events, trace_lines=tracer.lines)
        state, event = firing
        events.append(event)
        tracer.firing(event)

    diagnostics = []
    if state.relations:
        unresolved = ', '.join(state.render_relation(r) for r in state.relations)
        logger.warning("Fixpoint reached with unresolved relations: %s", unresolved)
        diagnostics.append(Diagnostic(UNRESOLVED_RELATIONS, f"unresolved at fixpoint: {unresolved}"))
    tracer.phase(f"fixpoint after {len(events)} firings")
    return RunResult(state=state, events=events, diagnostics=diagnostics)


def linearize(state: GenState, collapse_spaces: bool = True) -> str:
    """Concatenate node surfaces within each segment; segments are joined by one space."""
    if state.relations:
        logger.warning("Linearizing %d segments with %d relations unresolved", len(state.segments), len(state.relations))
    parts = [''.join(state.nodes[uid].surface for uid in segment) for segment in state.segments]
    text = SEGMENT_SEPARATOR.join(parts)
    if collapse_spaces:
        text = WHITESPACE_RUN.sub(' ', text).strip()
    return text


def generate(doc: UNLDocument, lexicon: Lexicon, grammar: Grammar, caps: Optional[EngineCaps] = None) -> GenerationResult:
    caps = caps or EngineCaps()
    tracer = GenerationTracer(caps.trace_level)
    state, diagnostics = init_state(doc, lexicon)
    tracer.phase(f"lookup: {len(state.nodes)} nodes, {len(state.relations)} relations")
    try:
        result = run(state, grammar, caps, tracer)
    except FiringCapExceeded as exc:
        exc.diagnostics = diagnostics + exc.diagnostics
        raise
    text = linearize(result.state, caps.collapse_spaces)
    tracer.phase(f"output: {text}")
    return GenerationResult(
        text=text,
        trace=result.events,
        trace_lines=tracer.lines,
        diagnostics=diagnostics + result.diagnostics,
        firing_count=result.firing_count,
        complete=not result.state.relations,
    )


def _generate_or_report(doc: UNLDocument, lexicon: Lexicon, grammar: Grammar, caps: EngineCaps) -> GenerationResult:
    try:
        return generate(doc, lexicon, grammar, caps)
    except FiringCapExceeded as exc:
        logger.warning("%s", exc)
        return GenerationResult(
            text=linearize(exc.state, caps.collapse_spaces),
            trace=exc.trace,
            trace_lines=exc.trace_lines,
            diagnostics=exc.diagnostics + [Diagnostic(FIRING_CAP, str(exc), severity=ERROR)],
            firing_count=exc.firing_count,
            complete=False,
        )
    except StripTooLongError as exc:
        logger.error("%s", exc)
        return GenerationResult(text='', diagnostics=[Diagnostic(STRIP_TOO_LONG, str(exc), severity=ERROR)], complete=False)


def generate_batch(documents: Sequence[UNLDocument], lexicon: Lexicon, grammar: Grammar,
                   caps: Optional[EngineCaps] = None, workers: Optional[int] = None) -> List[GenerationResult]:
    """Generate every document on a thread pool; results keep input order."""
    caps = caps or EngineCaps()
    workers = settings.DECONVERTER_WORKERS if workers is None else workers
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(lambda doc: _generate_or_report(doc, lexicon, grammar, caps), documents))
    logger.info("Generated %d sentences (%d incomplete)", len(results), sum(not r.complete for r in results))
    return results
