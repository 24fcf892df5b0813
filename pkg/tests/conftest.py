from pathlib import Path

import pytest

from app.corpus.services.fixture_suite import load_fixture_suite
from app.grammar.services.rule_parser import load_grammar
from app.lexicon.services.dictionary_loader import load_dictionary

ROOT = Path(__file__).resolve().parent.parent
FIXTURES_DIR = ROOT / 'fixtures'
TEST_DATA_DIR = Path(__file__).resolve().parent / 'data'


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def dictionary_path():
    return FIXTURES_DIR / 'punjabi.dic'


@pytest.fixture
def grammar_path():
    return FIXTURES_DIR / 'punjabi.grm'


@pytest.fixture(scope='session')
def lexicon():
    return load_dictionary(FIXTURES_DIR / 'punjabi.dic')


@pytest.fixture(scope='session')
def grammar():
    return load_grammar(FIXTURES_DIR / 'punjabi.grm')


@pytest.fixture(scope='session')
def fixture_suite():
    return load_fixture_suite(FIXTURES_DIR)


@pytest.fixture
def write_file(tmp_path):
    """Write UTF-8 text under tmp_path and return the path."""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return path
    return _write
