# corpus/services/fixture_suite.py
"""
Loader for the versioned fixture suite:

    fixtures/punjabi.dic
    fixtures/punjabi.grm
    fixtures/cases/<name>.unl  .out  .ref  .trace

``.trace`` holds the expected level-2 firing prefix, one ``#<step> fire r<index>``
per line.
"""

import logging
import re
from pathlib import Path
from typing import Optional, Tuple, Union

from django.conf import settings

from app.corpus.schemas.fixture_types import FixtureSuite, GoldenCase
from app.exceptions import MissingFixtureError
from app.text_io import read_source

logger = logging.getLogger(__name__)

DICTIONARY_FILE = 'punjabi.dic'
GRAMMAR_FILE = 'punjabi.grm'
CASES_DIR = 'cases'
CASE_SUFFIXES = ('.out', '.ref', '.trace')

FIRING_LINE = re.compile(r'^#(?P<step>\d+) fire r(?P<index>\d+)')


def parse_rule_sequence(trace_text: str) -> Tuple[int, ...]:
    return tuple(
        int(match.group('index'))
        for match in (FIRING_LINE.match(line) for line in trace_text.split('\n'))
        if match
    )


def _require(path: Path) -> Path:
    if not path.is_file():
        raise MissingFixtureError(path)
    return path


def _single_line(path: Path) -> str:
    return read_source(_require(path)).strip('\n')


def load_case(unl_path: Path) -> GoldenCase:
    stem = unl_path.with_suffix('')
    output, reference, trace = (stem.with_suffix(suffix) for suffix in CASE_SUFFIXES)
    return GoldenCase(
        name=stem.name,
        unl_text=read_source(unl_path),
        expected_output=_single_line(output),
        expected_rule_sequence=parse_rule_sequence(read_source(_require(trace))),
        reference=_single_line(reference),
    )


def load_fixture_suite(root: Optional[Union[str, Path]] = None) -> FixtureSuite:
    root = Path(root or settings.FIXTURE_SUITE_DIR)
    dictionary = _require(root / DICTIONARY_FILE)
    grammar = _require(root / GRAMMAR_FILE)
    cases_dir = root / CASES_DIR
    if not cases_dir.is_dir():
        raise MissingFixtureError(cases_dir)

    cases = [load_case(path) for path in sorted(cases_dir.glob('*.unl'))]
    logger.info("Loaded %d golden cases from %s", len(cases), root)
    return FixtureSuite(cases=cases, dictionary_path=dictionary, grammar_path=grammar, root=root)
