# app/diagnostics.py
"""Non-fatal findings reported by validators, loaders and the linter."""

from dataclasses import dataclass
from typing import Iterable, List, Optional

WARNING = 'warning'
ERROR = 'error'


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    severity: str = WARNING
    line: Optional[int] = None
    subject: Optional[str] = None

    @property
    def is_error(self) -> bool:
        return self.severity == ERROR

    def render(self, source: Optional[str] = None) -> str:
        where = ''
        if source and self.line is not None:
            where = f"{source}:{self.line}: "
        elif source:
            where = f"{source}: "
        elif self.line is not None:
            where = f"line {self.line}: "
        return f"{where}{self.severity}: {self.kind}: {self.message}"

    def __str__(self) -> str:
        return self.render()


def has_errors(diagnostics: Iterable[Diagnostic]) -> bool:
    return any(d.is_error for d in diagnostics)


def kinds(diagnostics: Iterable[Diagnostic]) -> List[str]:
    return [d.kind for d in diagnostics]
