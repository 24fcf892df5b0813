# corpus/schemas/fixture_types.py
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple

PUBLISHED_CASE_PREFIX = 'published_'


@dataclass(frozen=True)
class GoldenCase:
    """One fixture sentence.

    ``expected_output`` is what the shipped grammar produces; ``reference`` is
    the correct target sentence used for scoring. They coincide for the
    published examples.
    """
    name: str
    unl_text: str
    expected_output: str
    expected_rule_sequence: Tuple[int, ...]
    reference: str

    @property
    def is_published(self) -> bool:
        return self.name.startswith(PUBLISHED_CASE_PREFIX)


@dataclass(frozen=True)
class FixtureSuite:
    cases: List[GoldenCase]
    dictionary_path: Path
    grammar_path: Path
    root: Path = field(default=Path('.'))

    @property
    def published_cases(self) -> List[GoldenCase]:
        return [case for case in self.cases if case.is_published]

    @property
    def variant_cases(self) -> List[GoldenCase]:
        return [case for case in self.cases if not case.is_published]
