# engine/services/tracer.py
"""
Line-oriented trace of a generation run.

Levels are cumulative: 1 adds phase summaries, 2 one line per firing,
3 the state before and after each firing plus inflection outcomes,
4 every failed match attempt.
"""

from typing import List

from app.engine.schemas.state_types import TraceEvent
from app.engine.utils.constants import (
    TRACE_ATTEMPTS, TRACE_FIRINGS, TRACE_PHASES, TRACE_STATES,
)


class GenerationTracer:
    def __init__(self, level: int = 0):
        self.level = level
        self.lines: List[str] = []

    def emit(self, level: int, line: str):
        if self.level >= level:
            self.lines.append(line)

    def phase(self, message: str):
        self.emit(TRACE_PHASES, f"== {message}")

    def firing(self, event: TraceEvent):
        self.emit(TRACE_FIRINGS, f"#{event.step} fire r{event.rule_index}: {event.rule_text} @ {event.site}")
        if self.level < TRACE_STATES:
            return
        self.emit(TRACE_STATES, f"    before: {event.before}")
        for outcome in event.inflections:
            self.emit(TRACE_STATES, f"    {outcome.describe()}")
        self.emit(TRACE_STATES, f"    after:  {event.after}")

    def miss(self, rule_index: int, site: str):
        self.emit(TRACE_ATTEMPTS, f"    miss r{rule_index} @ {site}")

    def render(self) -> str:
        return ''.join(line + '\n' for line in self.lines)
