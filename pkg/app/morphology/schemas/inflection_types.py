# morphology/schemas/inflection_types.py
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class InflectionOutcome:
    matched_case: Optional[int]
    surface_before: str
    surface_after: str
    node: str = ''

    @property
    def changed(self) -> bool:
        return self.surface_before != self.surface_after

    def describe(self) -> str:
        if self.matched_case is None:
            return f"inflect {self.node}: no case matched, surface unchanged"
        if not self.changed:
            return f"inflect {self.node}: case {self.matched_case}, nothing appended"
        return f"inflect {self.node}: case {self.matched_case}, {self.surface_before!r} -> {self.surface_after!r}"
