# grammar/services/rule_tokenizer.py
"""Lexer for the transformation-rule language."""

from dataclasses import dataclass
from enum import Enum, auto
from typing import List

from app.exceptions import GrammarSyntaxError
from app.grammar.utils.constants import SYNTAX_ERROR


class TokenType(Enum):
    LPAREN = auto()
    RPAREN = auto()
    LBRACE = auto()
    RBRACE = auto()
    SEMICOLON = auto()
    COMMA = auto()
    ASSIGN = auto()
    PLUS = auto()
    MINUS = auto()
    CARET = auto()
    AT = auto()
    AMP = auto()
    EQ = auto()
    BANG = auto()
    GT = auto()
    IDENT = auto()
    VARIABLE = auto()
    STRING = auto()
    EOF = auto()


SINGLE_CHAR_TOKENS = {
    '(': TokenType.LPAREN,
    ')': TokenType.RPAREN,
    '{': TokenType.LBRACE,
    '}': TokenType.RBRACE,
    ';': TokenType.SEMICOLON,
    ',': TokenType.COMMA,
    '+': TokenType.PLUS,
    '-': TokenType.MINUS,
    '^': TokenType.CARET,
    '@': TokenType.AT,
    '&': TokenType.AMP,
    '=': TokenType.EQ,
    '!': TokenType.BANG,
    '>': TokenType.GT,
}


@dataclass(frozen=True)
class Token:
    type: TokenType
    value: str
    line: int
    col: int
    start: int
    end: int

    def describe(self) -> str:
        if self.type is TokenType.EOF:
            return 'end of input'
        if self.type is TokenType.STRING:
            return f'"{self.value}"'
        return f"'{self.value}'"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch == '_'


class Lexer:
    def __init__(self, source: str):
        self.source = source
        self.pos = 0
        self.line = 1
        self.col = 1
        self.tokens: List[Token] = []

    def peek(self, offset: int = 0) -> str:
        pos = self.pos + offset
        return self.source[pos] if pos < len(self.source) else ''

    def advance(self) -> str:
        ch = self.peek()
        self.pos += 1
        if ch == '\n':
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def error(self, message: str, expected: str = None) -> GrammarSyntaxError:
        return GrammarSyntaxError(SYNTAX_ERROR, message, line=self.line, column=self.col, expected=expected)

    def skip_trivia(self):
        while self.pos < len(self.source):
            ch = self.peek()
            if ch.isspace():
                self.advance()
            elif ch == '/' and self.peek(1) == '/':
                while self.peek() and self.peek() != '\n':
                    self.advance()
            else:
                break

    def read_string(self) -> str:
        self.advance()
        start = self.pos
        while self.peek() != '"':
            if not self.peek():
                raise self.error('unterminated string literal', expected='"')
            self.advance()
        value = self.source[start:self.pos]
        self.advance()
        return value

    def read_while(self, predicate) -> str:
        start = self.pos
        while self.peek() and predicate(self.peek()):
            self.advance()
        return self.source[start:self.pos]

    def tokenize(self) -> List[Token]:
        while True:
            self.skip_trivia()
            line, col, start = self.line, self.col, self.pos
            if self.pos >= len(self.source):
                self.tokens.append(Token(TokenType.EOF, '', line, col, start, start))
                return self.tokens

            ch = self.peek()
            if ch == '"':
                token_type, value = TokenType.STRING, self.read_string()
            elif ch == ':' and self.peek(1) == '=':
                self.advance()
                self.advance()
                token_type, value = TokenType.ASSIGN, ':='
            elif ch == '%':
                self.advance()
                name = self.read_while(lambda c: 'a' <= c <= 'z')
                if not name:
                    raise self.error("variable name must follow '%'", expected='%[a-z]+')
                token_type, value = TokenType.VARIABLE, '%' + name
            elif ch in SINGLE_CHAR_TOKENS:
                self.advance()
                token_type, value = SINGLE_CHAR_TOKENS[ch], ch
            elif _is_ident_char(ch):
                token_type, value = TokenType.IDENT, self.read_while(_is_ident_char)
            else:
                raise self.error(f"unexpected character {ch!r}")
            self.tokens.append(Token(token_type, value, line, col, start, self.pos))


def tokenize(source: str) -> List[Token]:
    return Lexer(source).tokenize()
