# grammar/services/rule_parser.py
"""
Recursive-descent parser for T-rules and FLX inflection specs.

    rule      := pattern ':=' action ';'
    pattern   := LABEL '(' spec ';' spec ')' | '(' spec ')'
    action    := LABEL '(' edits ';' edits ')' | ('(' item ')')+
    item      := STRING | edit (',' edit)*
    flx       := case (';' case)* ';'?
    case      := condition ':=' INT '>' STRING
    condition := '{' terms '}' | terms        terms := '^'? TOKEN ('&' '^'? TOKEN)*

Blocks between {drules} and {/drules} lines are kept as opaque text.
"""

import logging
from pathlib import Path
from typing import List, Optional, Set, Tuple, Union

from app.diagnostics import Diagnostic
from app.exceptions import GrammarSyntaxError, InputParseError, UnboundVariableError
from app.grammar.schemas.rule_types import (
    ActionItem, AffixOp, ConditionTerm, ConstraintKind, Edit, EditKind,
    FeatureConstraint, FlxCase, FlxSpec, Grammar, NodeSeqPattern, NodeSpec,
    RelationAction, RelationPattern, SequenceAction, TRule,
)
from app.grammar.services.rule_tokenizer import Token, TokenType, tokenize
from app.grammar.utils.constants import (
    DRULES_CLOSE, DRULES_OPEN, EMPTY_CONDITION, EMPTY_RULE, FLX,
    LABEL_PATTERN, NOT_EXECUTED, SYNTAX_ERROR,
)
from app.text_io import normalize_source, read_source

logger = logging.getLogger(__name__)


class Parser:
    def __init__(self, tokens: List[Token], source: str = ''):
        self.tokens = tokens
        self.source = source
        self.pos = 0

    # -- token helpers -----------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def check(self, *types: TokenType) -> bool:
        return self.peek().type in types

    def advance(self) -> Token:
        token = self.peek()
        if token.type is not TokenType.EOF:
            self.pos += 1
        return token

    def error(self, expected: str, token: Optional[Token] = None, kind: str = SYNTAX_ERROR) -> GrammarSyntaxError:
        token = token or self.peek()
        line, column = token.line, token.col
        if token.type is TokenType.EOF and self.pos > 0:
            # Point just past the last token, not at the line after it.
            last = self.tokens[self.pos - 1]
            line, column = last.line, last.col + (last.end - last.start)
        return GrammarSyntaxError(
            kind,
            f"expected {expected}, found {token.describe()}",
            line=line,
            column=column,
            expected=expected,
        )

    def expect(self, token_type: TokenType, expected: str) -> Token:
        if not self.check(token_type):
            raise self.error(expected)
        return self.advance()

    def expect_ident(self, expected: str = 'a feature token') -> str:
        return self.expect(TokenType.IDENT, expected).value

    # -- grammar -----------------------------------------------------------

    def parse_rules(self) -> List[TRule]:
        rules: List[TRule] = []
        while not self.check(TokenType.EOF):
            if self.check(TokenType.SEMICOLON):
                token = self.peek()
                raise GrammarSyntaxError(EMPTY_RULE, "';' without a rule", line=token.line, column=token.col)
            rules.append(self.parse_rule(len(rules)))
        return rules

    def parse_rule(self, index: int) -> TRule:
        first = self.peek()
        pattern = self.parse_pattern()
        self.expect(TokenType.ASSIGN, "':='")
        action = self.parse_action(pattern)
        last = self.expect(TokenType.SEMICOLON, "';' ending the rule")
        rule = TRule(
            index=index,
            pattern=pattern,
            action=action,
            text=self.source[first.start:last.end] if self.source else '',
            line=first.line,
        )
        for variable in rule.action_variables:
            if variable not in rule.pattern_variables:
                raise UnboundVariableError(variable, index, line=first.line)
        return rule

    def parse_label(self) -> str:
        token = self.expect(TokenType.IDENT, 'a relation label')
        if not LABEL_PATTERN.match(token.value):
            raise self.error('a relation label of 2-3 lowercase letters', token)
        return token.value

    def parse_pattern(self):
        if self.check(TokenType.IDENT):
            label = self.parse_label()
            self.expect(TokenType.LPAREN, "'('")
            source = self.parse_spec()
            self.expect(TokenType.SEMICOLON, "';' between relation endpoints")
            target = self.parse_spec()
            self.expect(TokenType.RPAREN, "')'")
            if source.binding and source.binding == target.binding:
                raise self.error(f"distinct variables, {source.binding} is bound twice")
            return RelationPattern(label, source, target)
        self.expect(TokenType.LPAREN, "'(' or a relation label")
        spec = self.parse_spec()
        self.expect(TokenType.RPAREN, "')'")
        return NodeSeqPattern(spec)

    def parse_spec(self) -> NodeSpec:
        constraints = [self.parse_constraint()]
        while self.check(TokenType.COMMA):
            self.advance()
            constraints.append(self.parse_constraint())
        variables = [c for c in constraints if c.kind is ConstraintKind.VARIABLE]
        if len(variables) > 1:
            raise self.error('at most one variable per node')
        return NodeSpec(tuple(constraints))

    def parse_constraint(self) -> FeatureConstraint:
        token = self.peek()
        if token.type is TokenType.VARIABLE:
            self.advance()
            return FeatureConstraint(ConstraintKind.VARIABLE, token=token.value)
        if token.type is TokenType.AT:
            self.advance()
            return FeatureConstraint(ConstraintKind.ATTRIBUTE, token=self.expect_ident('an attribute name'))
        if token.type is TokenType.CARET:
            self.advance()
            if self.check(TokenType.AT):
                self.advance()
                return FeatureConstraint(ConstraintKind.NEGATED_ATTRIBUTE, token=self.expect_ident('an attribute name'))
            return FeatureConstraint(ConstraintKind.NEGATED_FEATURE, token=self.expect_ident())
        if token.type is TokenType.LBRACE:
            self.advance()
            members = []
            while self.check(TokenType.IDENT):
                members.append(self.advance().value)
            if len(members) < 2:
                raise self.error('at least two alternatives inside {...}')
            self.expect(TokenType.RBRACE, "'}'")
            return FeatureConstraint(ConstraintKind.DISJUNCTION, members=tuple(members))
        if token.type is TokenType.IDENT:
            self.advance()
            if self.check(TokenType.EQ):
                self.advance()
                return FeatureConstraint(ConstraintKind.KEY_VALUE, key=token.value, value=self.expect_ident('a value'))
            return FeatureConstraint(ConstraintKind.FEATURE, token=token.value)
        raise self.error('a constraint')

    def parse_action(self, pattern):
        if self.check(TokenType.IDENT):
            label_token = self.peek()
            label = self.parse_label()
            if not isinstance(pattern, RelationPattern):
                raise self.error('a sequence action; relation actions need a relation pattern', label_token)
            self.expect(TokenType.LPAREN, "'('")
            source_variable, source_edits = self.parse_edit_list({TokenType.SEMICOLON})
            self.expect(TokenType.SEMICOLON, "';' between relation endpoints")
            target_variable, target_edits = self.parse_edit_list({TokenType.RPAREN})
            self.expect(TokenType.RPAREN, "')'")
            return RelationAction(label, source_variable, source_edits, target_variable, target_edits)

        items: List[ActionItem] = []
        used: Set[str] = set()
        while self.check(TokenType.LPAREN):
            self.advance()
            if self.check(TokenType.STRING):
                items.append(ActionItem(literal=self.advance().value))
            else:
                variable, edits = self.parse_edit_list({TokenType.RPAREN})
                if variable is None:
                    raise self.error("a quoted literal or a bound variable in the action item")
                if variable in used:
                    raise self.error(f"{variable} used once per action")
                used.add(variable)
                items.append(ActionItem(variable=variable, edits=edits))
            self.expect(TokenType.RPAREN, "')'")
        if not items:
            raise self.error("'(' starting an action item or a relation label")
        return SequenceAction(tuple(items))

    def parse_edit_list(self, terminators: Set[TokenType]) -> Tuple[Optional[str], Tuple[Edit, ...]]:
        variable: Optional[str] = None
        edits: List[Edit] = []
        if self.peek().type in terminators:
            return variable, ()
        while True:
            if self.check(TokenType.VARIABLE):
                token = self.advance()
                if variable is not None:
                    raise self.error('at most one variable per node', token)
                variable = token.value
            else:
                edits.append(self.parse_edit())
            if not self.check(TokenType.COMMA):
                return variable, tuple(edits)
            self.advance()

    def parse_edit(self) -> Edit:
        token = self.peek()
        if token.type is TokenType.BANG:
            self.advance()
            name = self.expect_ident(FLX)
            if name != FLX:
                raise self.error(f"'{FLX}' after '!'", self.tokens[self.pos - 1])
            return Edit(EditKind.EXECUTE_FLX)
        if token.type in (TokenType.PLUS, TokenType.MINUS):
            self.advance()
            adding = token.type is TokenType.PLUS
            if self.check(TokenType.AT):
                self.advance()
                name = self.expect_ident('an attribute name')
                return Edit(EditKind.ADD_ATTRIBUTE if adding else EditKind.REMOVE_ATTRIBUTE, token=name)
            name = self.expect_ident()
            if self.check(TokenType.EQ):
                self.advance()
                value = self.expect_ident('a value')
                return Edit(EditKind.SET_KEY if adding else EditKind.CLEAR_KEY, key=name, value=value)
            if adding and name == FLX and self.check(TokenType.LPAREN):
                return Edit(EditKind.ATTACH_FLX, token=FLX, flx=self.parse_flx_body())
            return Edit(EditKind.ADD_FEATURE if adding else EditKind.REMOVE_FEATURE, token=name)
        if token.type is TokenType.AT:
            self.advance()
            return Edit(EditKind.REMOVE_ATTRIBUTE, token=self.expect_ident('an attribute name'))
        if token.type is TokenType.IDENT:
            self.advance()
            if self.check(TokenType.EQ):
                self.advance()
                return Edit(EditKind.SET_KEY, key=token.value, value=self.expect_ident('a value'))
            if token.value == FLX and self.check(TokenType.LPAREN):
                return Edit(EditKind.ATTACH_FLX, token=FLX, flx=self.parse_flx_body())
            # An unsigned token in an action consumes it.
            return Edit(EditKind.REMOVE_FEATURE, token=token.value)
        raise self.error('an edit')

    # -- FLX specs ---------------------------------------------------------

    def parse_flx_body(self) -> FlxSpec:
        self.expect(TokenType.LPAREN, "'('")
        spec = self.parse_flx_cases({TokenType.RPAREN})
        self.expect(TokenType.RPAREN, "')' closing the FLX spec")
        return spec

    def parse_flx_cases(self, terminators: Set[TokenType]) -> FlxSpec:
        cases = [self.parse_flx_case()]
        while self.check(TokenType.SEMICOLON):
            self.advance()
            if self.peek().type in terminators:
                break
            cases.append(self.parse_flx_case())
        if self.peek().type not in terminators:
            raise self.error("';' between FLX cases")
        return FlxSpec(tuple(cases))

    def parse_flx_case(self) -> FlxCase:
        start = self.peek()
        braced = self.check(TokenType.LBRACE)
        if braced:
            self.advance()
        terms = []
        if self.check(TokenType.CARET, TokenType.IDENT):
            terms.append(self.parse_term())
            while self.check(TokenType.AMP):
                self.advance()
                terms.append(self.parse_term())
        if braced:
            self.expect(TokenType.RBRACE, "'}'")
        if not terms:
            raise self.error('a condition before \':=\'', start, kind=EMPTY_CONDITION)
        self.expect(TokenType.ASSIGN, "':='")
        strip_token = self.expect(TokenType.IDENT, 'a strip count')
        if not strip_token.value.isdigit():
            raise self.error('a non-negative strip count', strip_token)
        self.expect(TokenType.GT, "'>'")
        append = self.expect(TokenType.STRING, 'a quoted suffix').value
        return FlxCase(tuple(terms), AffixOp(int(strip_token.value), append))

    def parse_term(self) -> ConditionTerm:
        negated = self.check(TokenType.CARET)
        if negated:
            self.advance()
        return ConditionTerm(self.expect_ident('a condition token'), negated)


def split_drules(text: str) -> Tuple[str, List[Tuple[int, str]]]:
    """Blank out D-rule blocks (keeping line numbers) and return them separately."""
    kept: List[str] = []
    blocks: List[Tuple[int, str]] = []
    current: Optional[List[str]] = None
    opened_at = 0
    for number, raw in enumerate(text.split('\n'), start=1):
        marker = raw.strip().lower()
        if current is None and marker == DRULES_OPEN:
            current, opened_at = [], number
            kept.append('')
        elif current is not None and marker == DRULES_CLOSE:
            blocks.append((opened_at, '\n'.join(current)))
            current = None
            kept.append('')
        elif current is not None:
            current.append(raw)
            kept.append('')
        else:
            kept.append(raw)
    if current is not None:
        raise GrammarSyntaxError(SYNTAX_ERROR, f"{DRULES_OPEN} block is not closed", line=opened_at, expected=DRULES_CLOSE)
    return '\n'.join(kept), blocks


def parse_grammar(text: str) -> Grammar:
    source, drule_blocks = split_drules(normalize_source(text))
    rules = Parser(tokenize(source), source).parse_rules()
    diagnostics = tuple(
        Diagnostic(NOT_EXECUTED, 'D-rule block is stored but not executed', line=line)
        for line, _ in drule_blocks
    )
    for diagnostic in diagnostics:
        logger.warning("%s", diagnostic)
    return Grammar(
        trules=tuple(rules),
        drules=tuple(block for _, block in drule_blocks),
        diagnostics=diagnostics,
    )


def parse_flx_spec(text: str) -> FlxSpec:
    parser = Parser(tokenize(normalize_source(text)))
    return parser.parse_flx_cases({TokenType.EOF})


def load_grammar(path: Union[str, Path]) -> Grammar:
    try:
        grammar = parse_grammar(read_source(path))
    except InputParseError as exc:
        exc.source = str(path)
        raise
    logger.info("Loaded %d T-rules and %d D-rule blocks from %s", len(grammar.trules), len(grammar.drules), path)
    return grammar
