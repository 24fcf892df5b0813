import random

import pytest

from app.exceptions import GrammarSyntaxError, UnboundVariableError
from app.grammar.schemas.rule_types import (
    ActionItem, AffixOp, ConditionTerm, ConstraintKind, Edit, EditKind, FeatureConstraint,
    NodeSeqPattern, NodeSpec, RelationPattern, SequenceAction,
)
from app.grammar.services.rule_parser import load_grammar, parse_flx_spec, parse_grammar
from app.grammar.services.rule_printer import render_grammar, render_rule
from app.grammar.services.rule_tokenizer import TokenType, tokenize
from app.text_io import read_source

from .conftest import TEST_DATA_DIR


def published_rules():
    lines = read_source(TEST_DATA_DIR / 'published_rules.txt').split('\n')
    return [line for line in lines if line.strip() and not line.startswith('//')]


def spread_out(text):
    """Pad structural tokens with whitespace, leaving quoted strings alone."""
    parts = text.split('"')
    for index in range(0, len(parts), 2):
        chunk = parts[index].replace(':=', '\u0000')
        for symbol in '(),;{}&':
            chunk = chunk.replace(symbol, f'  {symbol}\n ')
        parts[index] = chunk.replace('\u0000', ' \t:= ')
    return '"'.join(parts)


class TestTokenizer:

    def test_token_types(self):
        types = [t.type for t in tokenize('(%x,M2):=(!FLX);')]
        assert types == [
            TokenType.LPAREN, TokenType.VARIABLE, TokenType.COMMA, TokenType.IDENT, TokenType.RPAREN,
            TokenType.ASSIGN, TokenType.LPAREN, TokenType.BANG, TokenType.IDENT, TokenType.RPAREN,
            TokenType.SEMICOLON, TokenType.EOF,
        ]

    def test_strings_keep_whitespace(self):
        strings = [t.value for t in tokenize('("  a ;b ")') if t.type is TokenType.STRING]
        assert strings == ['  a ;b ']

    def test_comments_are_skipped(self):
        tokens = tokenize('// comment\n(%x)')
        assert tokens[0].type is TokenType.LPAREN
        assert tokens[0].line == 2

    def test_unexpected_character(self):
        with pytest.raises(GrammarSyntaxError) as exc:
            tokenize('(%x,V):(%x);')
        assert (exc.value.line, exc.value.column) == (1, 7)

    def test_unterminated_string(self):
        with pytest.raises(GrammarSyntaxError):
            tokenize('("abc)')


class TestParseGrammar:

    def test_paradigm_attachment_rule(self):
        grammar = parse_grammar('(%x,M2):=(%x,-M2,+FLX(AGT:=0>"ਨੂੰ"));')
        rule = grammar.trules[0]
        assert rule.pattern == NodeSeqPattern(NodeSpec((
            FeatureConstraint(ConstraintKind.VARIABLE, token='%x'),
            FeatureConstraint(ConstraintKind.FEATURE, token='M2'),
        )))
        item = rule.action.items[0]
        assert item.variable == '%x'
        assert item.edits[0] == Edit(EditKind.REMOVE_FEATURE, token='M2')
        attach = item.edits[1]
        assert attach.kind is EditKind.ATTACH_FLX
        assert len(attach.flx.cases) == 1
        assert attach.flx.cases[0].condition == (ConditionTerm('AGT'),)
        assert attach.flx.cases[0].op == AffixOp(0, 'ਨੂੰ')

    def test_reciprocal_linearization_rule(self):
        rule = parse_grammar('agt(%a,V,@reciprocal;%b,@3,@pl):=(%b)(" ")(%a,PER=3PS,+PLR);').trules[0]
        assert isinstance(rule.pattern, RelationPattern)
        assert rule.pattern.label == 'agt'
        assert rule.pattern.source.binding == '%a'
        assert [(c.kind, c.token) for c in rule.pattern.source.conditions] == [
            (ConstraintKind.FEATURE, 'V'), (ConstraintKind.ATTRIBUTE, 'reciprocal'),
        ]
        assert [c.token for c in rule.pattern.target.conditions] == ['3', 'pl']
        assert rule.action == SequenceAction((
            ActionItem(variable='%b'),
            ActionItem(literal=' '),
            ActionItem(variable='%a', edits=(
                Edit(EditKind.SET_KEY, key='PER', value='3PS'),
                Edit(EditKind.ADD_FEATURE, token='PLR'),
            )),
        ))

    def test_empty_text(self):
        assert len(parse_grammar('')) == 0
        assert len(parse_grammar('// only a comment\n')) == 0

    def test_rule_index_line_and_text(self):
        grammar = parse_grammar('\n(%x,V):=(%x,+A);\n  (%x,A):=(%x,-A) ;\n')
        assert [r.index for r in grammar.trules] == [0, 1]
        assert [r.line for r in grammar.trules] == [2, 3]
        assert grammar.trules[1].text == '(%x,A):=(%x,-A) ;'

    def test_disjunction_and_negations(self):
        rule = parse_grammar('({N V D J R},FLX,^inflected,^@past,%x):=(!FLX,-FLX,+inflected,%x);').trules[0]
        kinds = [c.kind for c in rule.pattern.spec.constraints]
        assert kinds == [
            ConstraintKind.DISJUNCTION, ConstraintKind.FEATURE, ConstraintKind.NEGATED_FEATURE,
            ConstraintKind.NEGATED_ATTRIBUTE, ConstraintKind.VARIABLE,
        ]
        assert rule.pattern.spec.constraints[0].members == ('N', 'V', 'D', 'J', 'R')
        assert [e.kind for e in rule.action.items[0].edits] == [
            EditKind.EXECUTE_FLX, EditKind.REMOVE_FEATURE, EditKind.ADD_FEATURE,
        ]

    def test_unsigned_edits_consume(self):
        edits = parse_grammar('(%x,M3,@multal):=(%x,M3,@multal,NUM=PLR,-NUM=SNG);').trules[0].action.items[0].edits
        assert edits == (
            Edit(EditKind.REMOVE_FEATURE, token='M3'),
            Edit(EditKind.REMOVE_ATTRIBUTE, token='multal'),
            Edit(EditKind.SET_KEY, key='NUM', value='PLR'),
            Edit(EditKind.CLEAR_KEY, key='NUM', value='SNG'),
        )

    def test_published_rules_parse_verbatim(self):
        rules = published_rules()
        assert len(rules) == 15
        for text in rules:
            assert len(parse_grammar(text)) == 1, text

    def test_fixture_grammar(self, grammar):
        assert len(grammar.trules) == 21
        assert [r.index for r in grammar.trules] == list(range(21))
        assert grammar.drules == ()

    def test_whitespace_and_comments_do_not_matter(self):
        for text in published_rules():
            padded = '// leading comment\n' + spread_out(text) + '\n// trailing comment\n'
            assert parse_grammar(padded) == parse_grammar(text)

    def test_fixture_grammar_whitespace_insensitive(self, grammar_path, grammar):
        lines = read_source(grammar_path).split('\n')
        rules_only = '\n'.join(line for line in lines if not line.lstrip().startswith('//'))
        assert parse_grammar(spread_out(rules_only)) == grammar

    def test_canonical_rendering_reparses(self, grammar):
        canonical = ''.join(render_rule(rule) + '\n' for rule in grammar.trules)
        assert parse_grammar(canonical) == grammar

    def test_render_grammar_numbers_rules(self, grammar):
        lines = render_grammar(grammar).splitlines()
        assert len(lines) == 21
        assert lines[0].startswith('r0\t(%x,M7):=')

    def test_drules_are_stored_not_executed(self):
        grammar = parse_grammar('{drules}\n(anything goes here\n{/drules}\n(%x,V):=(%x,+A);\n')
        assert grammar.drules == ('(anything goes here',)
        assert len(grammar.trules) == 1
        assert grammar.trules[0].line == 4
        assert [d.kind for d in grammar.diagnostics] == ['NotExecuted']

    def test_unclosed_drules(self):
        with pytest.raises(GrammarSyntaxError):
            parse_grammar('{drules}\nx\n')


class TestGrammarErrors:

    def test_missing_semicolon(self):
        with pytest.raises(GrammarSyntaxError) as exc:
            parse_grammar('(%x,V):=(%x,+A)')
        assert exc.value.kind == 'SyntaxError'
        assert "';' ending the rule" in exc.value.expected
        assert exc.value.line == 1

    def test_missing_semicolon_before_trailing_newline(self):
        with pytest.raises(GrammarSyntaxError) as exc:
            parse_grammar('(%x,V):=(%x,+A)\n\n')
        assert (exc.value.line, exc.value.column) == (1, 16)

    def test_error_position_on_later_line(self):
        with pytest.raises(GrammarSyntaxError) as exc:
            parse_grammar('(%x,V):=(%x,+A);\n(%x,V):=(%x,+);\n')
        assert (exc.value.line, exc.value.column) == (2, 14)

    def test_empty_rule(self):
        with pytest.raises(GrammarSyntaxError) as exc:
            parse_grammar(';')
        assert exc.value.kind == 'EmptyRule'

    def test_relation_action_needs_relation_pattern(self):
        with pytest.raises(GrammarSyntaxError):
            parse_grammar('(%x,V):=agt(%x;);')

    def test_literal_only_item_needs_quotes(self):
        with pytest.raises(GrammarSyntaxError):
            parse_grammar('(%x,V):=(+A);')

    def test_disjunction_needs_two_members(self):
        with pytest.raises(GrammarSyntaxError):
            parse_grammar('({N},%x):=(%x,+A);')

    def test_unbound_variable(self):
        with pytest.raises(UnboundVariableError) as exc:
            parse_grammar('(%x,V):=(%x,+A);\nagt(%a;%b):=(%b)(%c);')
        assert exc.value.variable == '%c'
        assert exc.value.rule_index == 1
        assert exc.value.line == 2

    def test_unbound_variables_always_rejected(self):
        rng = random.Random(11)
        letters = 'abcdefghijklmnopqrstuvwxyz'
        for _ in range(300):
            bound = ['%' + ''.join(rng.choice(letters) for _ in range(rng.randint(1, 3))) for _ in range(2)]
            if bound[0] == bound[1]:
                continue
            stray = '%' + ''.join(rng.choice(letters) for _ in range(4))
            if stray in bound:
                continue
            if rng.random() < 0.5:
                text = f'({bound[0]},V):=({stray},+A);'
            else:
                items = [f'({bound[0]})', '(" ")', f'({stray},-X)']
                rng.shuffle(items)
                text = f'agt({bound[0]};{bound[1]},R):={"".join(items)};'
            with pytest.raises(UnboundVariableError) as exc:
                parse_grammar(text)
            assert exc.value.variable == stray

    def test_load_error_names_file(self, write_file):
        path = write_file('broken.grm', '(%x,V):=(%x,+A)\n')
        with pytest.raises(GrammarSyntaxError) as exc:
            load_grammar(path)
        assert str(exc.value).startswith(f"{path}:")


class TestParseFlxSpec:

    def test_two_cases(self):
        spec = parse_flx_spec('SNG:=0>""; PLR:=0>"ਨਾਂ"')
        assert [(c.condition, c.op) for c in spec.cases] == [
            ((ConditionTerm('SNG'),), AffixOp(0, '')),
            ((ConditionTerm('PLR'),), AffixOp(0, 'ਨਾਂ')),
        ]

    def test_braced_condition(self):
        spec = parse_flx_spec('{PST&MCL&SNG&ANT}:=0>" ਚੁੱਕਾ ਸੀ"')
        assert len(spec.cases) == 1
        assert [t.token for t in spec.cases[0].condition] == ['PST', 'MCL', 'SNG', 'ANT']
        assert spec.cases[0].op.append == ' ਚੁੱਕਾ ਸੀ'

    def test_braces_are_grouping_only(self):
        assert parse_flx_spec('{A&B}:=0>"x"') == parse_flx_spec('A&B:=0>"x"')

    def test_negation_and_strip(self):
        spec = parse_flx_spec('A&^B:=1>"x"')
        assert spec.cases[0].condition == (ConditionTerm('A'), ConditionTerm('B', negated=True))
        assert spec.cases[0].op == AffixOp(1, 'x')

    def test_trailing_semicolon(self):
        assert len(parse_flx_spec('A:=0>"x";').cases) == 1

    @pytest.mark.parametrize('text', [':=0>"x"', '{}:=0>"x"'])
    def test_empty_condition(self, text):
        with pytest.raises(GrammarSyntaxError) as exc:
            parse_flx_spec(text)
        assert exc.value.kind == 'EmptyCondition'

    @pytest.mark.parametrize('text', ['A:=x>"y"', 'A:=0"y"', 'A:=0>y', 'A 0>"y"'])
    def test_malformed_case(self, text):
        with pytest.raises(GrammarSyntaxError) as exc:
            parse_flx_spec(text)
        assert exc.value.kind == 'SyntaxError'
