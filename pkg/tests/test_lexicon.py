import pytest

from app.exceptions import DictionaryParseError
from app.lexicon.schemas.lexicon_types import LexEntry
from app.lexicon.services.dictionary_loader import (
    load_compatibility_table, load_dictionary, parse_dictionary, parse_entry, serialize_dictionary,
)
from app.lexicon.services.lookup import lookup
from app.lexicon.utils.validators import LexiconValidator


class TestParseDictionary:

    def test_verb_entry(self):
        entry = parse_entry('[ਪਹੁੰਚ] "arrive" (V,M7);')
        assert entry.lemma == 'ਪਹੁੰਚ'
        assert entry.uw == 'arrive'
        assert entry.features == ('V', 'M7')

    def test_pronoun_entry(self):
        entry = parse_entry('[ਉਹ] "00" (R,M2);')
        assert (entry.lemma, entry.uw, entry.features) == ('ਉਹ', '00', ('R', 'M2'))

    def test_empty_file(self):
        assert len(parse_dictionary('')) == 0

    def test_comments_and_blank_lines_are_skipped(self):
        lexicon = parse_dictionary('// header\n\n[ਉਹ] "00" (R,M2);\n   \n')
        assert len(lexicon) == 1
        assert lexicon.entries['00'][0].line == 3

    def test_key_value_features(self):
        entry = parse_entry('[ਪਿਆਰ] "love" (V,ATE=INF);')
        assert entry.bare_features == ('V',)
        assert entry.key_values == {'ATE': 'INF'}

    @pytest.mark.parametrize('line', [
        'ਪਹੁੰਚ "arrive" (V);',
        '[ਪਹੁੰਚ] arrive (V);',
        '[ਪਹੁੰਚ] "arrive" (V)',
        '[ਪਹੁੰਚ] "arrive" (V,@past);',
        '[ਪਹੁੰਚ] "arrive" (V,,M7);',
        '[ ] "arrive" (V);',
    ])
    def test_malformed_entry(self, line):
        with pytest.raises(DictionaryParseError) as exc:
            parse_dictionary('// ok\n' + line + '\n')
        assert exc.value.kind == 'MalformedEntry'
        assert exc.value.line == 2

    def test_duplicate_entry_collapses_with_warning(self):
        lexicon = parse_dictionary('[ਉਹ] "00" (R,M2);\n[ਉਹ] "00" (R,M2);\n')
        assert len(lexicon) == 1
        assert [d.kind for d in lexicon.diagnostics] == ['DuplicateEntry']
        assert not lexicon.diagnostics[0].is_error

    def test_bom_is_stripped(self):
        lexicon = parse_dictionary('\ufeff[ਉਹ] "00" (R,M2);\n')
        assert list(lexicon.entries) == ['00']

    def test_serialize_reproduces_entry_set(self, dictionary_path):
        lexicon = load_dictionary(dictionary_path)
        again = parse_dictionary(serialize_dictionary(lexicon))
        assert set(again.all_entries()) == set(lexicon.all_entries())

    def test_load_error_carries_path(self, write_file):
        path = write_file('bad.dic', '[x] "y" (Z)\n')
        with pytest.raises(DictionaryParseError) as exc:
            load_dictionary(path)
        assert exc.value.source == str(path)


class TestLookup:

    def test_book(self, lexicon):
        assert [e.lemma for e in lookup(lexicon, 'book', ['multal'])] == ['ਕਿਤਾਬ']

    def test_love(self, lexicon):
        assert [e.lemma for e in lookup(lexicon, 'love', ['present', 'reciprocal'])] == ['ਪਿਆਰ']

    def test_unknown_headword(self, lexicon):
        assert lookup(lexicon, 'zzzz', []) == []

    def test_declaration_order_and_uw(self):
        lexicon = parse_dictionary('[ਉਹ] "00" (R,M2);\n[ਇਹ] "00" (R,M2,NEAR);\n[ਕਿਤਾਬ] "book" (N);\n')
        found = lookup(lexicon, '00', [])
        assert [e.lemma for e in found] == ['ਉਹ', 'ਇਹ']
        assert all(e.uw == '00' for e in found)
        assert lookup(lexicon, '00', []) == found

    def test_compatibility_table_filters(self):
        lexicon = parse_dictionary(
            '[ਉਹ] "00" (R,FAR);\n[ਇਹ] "00" (R,NEAR);\n',
            compatibility={'proximal': ('NEAR',)},
        )
        assert [e.lemma for e in lookup(lexicon, '00', ['proximal'])] == ['ਇਹ']
        assert [e.lemma for e in lookup(lexicon, '00', ['distal'])] == ['ਉਹ', 'ਇਹ']

    def test_load_compatibility_table(self, write_file):
        path = write_file('compat.tsv', '# attribute\tfeatures\n@proximal\tNEAR, R\n')
        assert load_compatibility_table(path) == {'proximal': ('NEAR', 'R')}
        assert load_compatibility_table('') == {}


class TestLexiconValidator:

    def test_shipped_dictionary_is_clean(self, lexicon):
        assert LexiconValidator.validate(lexicon) == []

    def test_shadowed_entry(self):
        lexicon = parse_dictionary('[ਉਹ] "00" (R,M2);\n[ਇਹ] "00" (R,M2);\n')
        diagnostics = LexiconValidator.validate(lexicon)
        assert [(d.kind, d.line) for d in diagnostics] == [('ShadowedEntry', 2)]

    def test_compatibility_separates_entries(self):
        lexicon = parse_dictionary(
            '[ਉਹ] "00" (R,FAR);\n[ਇਹ] "00" (R,NEAR);\n',
            compatibility={'proximal': ('NEAR',)},
        )
        assert LexiconValidator.validate(lexicon) == []

    def test_part_of_speech_counts(self, lexicon):
        assert LexiconValidator.part_of_speech_counts(lexicon) == {'verbs': 2, 'pronouns': 1, 'nouns': 1}

    def test_untagged_words_count_as_other(self):
        lexicon = parse_dictionary('[ਅਤੇ] "and" (CONJ);\n')
        assert LexiconValidator.part_of_speech_counts(lexicon) == {'other': 1}

    def test_entry_render(self):
        entry = LexEntry('ਉਹ', '00', ('R', 'M2'))
        assert entry.render() == '[ਉਹ] "00" (R,M2);'
