import pytest

from app.corpus.services.fixture_suite import load_fixture_suite, parse_rule_sequence
from app.exceptions import MissingFixtureError


class TestFixtureSuite:

    def test_cases_are_loaded(self, fixture_suite, dictionary_path, grammar_path):
        assert len(fixture_suite.cases) == 13
        assert len(fixture_suite.published_cases) == 3
        assert len(fixture_suite.variant_cases) == 10
        assert fixture_suite.dictionary_path == dictionary_path
        assert fixture_suite.grammar_path == grammar_path

    def test_cases_sorted_by_name(self, fixture_suite):
        names = [case.name for case in fixture_suite.cases]
        assert names == sorted(names)

    def test_published_case_contents(self, fixture_suite):
        case = next(c for c in fixture_suite.cases if c.name == 'published_verb_present_perfect')
        assert case.is_published
        assert case.expected_output == case.reference
        assert case.expected_rule_sequence == (0, 1, 3, 5, 15, 20, 20)
        assert '{unl}' in case.unl_text

    def test_parse_rule_sequence(self):
        text = '#1 fire r4: (%x,V):=(%x,+A); @ [x]\n    before: ...\n#2 fire r12\n== fixpoint\n'
        assert parse_rule_sequence(text) == (4, 12)

    def test_default_root_from_settings(self, settings, fixtures_dir):
        settings.FIXTURE_SUITE_DIR = str(fixtures_dir)
        assert len(load_fixture_suite().cases) == 13

    def test_missing_directory(self, tmp_path):
        with pytest.raises(MissingFixtureError):
            load_fixture_suite(tmp_path)

    def test_missing_companion_file(self, tmp_path, dictionary_path, grammar_path):
        (tmp_path / 'punjabi.dic').write_text(dictionary_path.read_text(encoding='utf-8'), encoding='utf-8')
        (tmp_path / 'punjabi.grm').write_text(grammar_path.read_text(encoding='utf-8'), encoding='utf-8')
        (tmp_path / 'cases').mkdir()
        (tmp_path / 'cases' / 'lonely.unl').write_text('{unl}\n{/unl}\n', encoding='utf-8')
        with pytest.raises(MissingFixtureError) as exc:
            load_fixture_suite(tmp_path)
        assert exc.value.path.name == 'lonely.out'
