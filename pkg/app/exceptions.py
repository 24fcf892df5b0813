# app/exceptions.py
"""Error types raised while loading inputs and generating sentences."""

from typing import Optional


class DeconversionError(Exception):
    """Base class for every failure the deconverter reports."""

    kind = 'DeconversionError'


class InputParseError(DeconversionError):
    """An input file was rejected; carries the error kind and its position."""

    def __init__(self, kind: str, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, source: Optional[str] = None):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column
        self.source = source

    def location(self) -> str:
        parts = [self.source or '<input>']
        if self.line is not None:
            parts.append(str(self.line))
            if self.column is not None:
                parts.append(str(self.column))
        return ':'.join(parts)

    def __str__(self) -> str:
        return f"{self.location()}: {self.kind}: {self.message}"


class SourceEncodingError(InputParseError):
    """An input file is not valid UTF-8."""

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        super().__init__('InvalidEncoding', message, line=line, source=source)


class UNLParseError(InputParseError):
    """Kinds: UnbalancedBlock, MalformedRelation, EmptyUW."""


class DictionaryParseError(InputParseError):
    """Kind: MalformedEntry."""


class GrammarSyntaxError(InputParseError):
    """Kinds: SyntaxError, EmptyCondition, EmptyRule."""

    def __init__(self, kind: str, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, expected: Optional[str] = None,
                 source: Optional[str] = None):
        super().__init__(kind, message, line=line, column=column, source=source)
        self.expected = expected


class UnboundVariableError(InputParseError):
    """An action refers to a variable its pattern never binds."""

    def __init__(self, variable: str, rule_index: int, line: Optional[int] = None,
                 source: Optional[str] = None):
        super().__init__(
            'UnboundVariable',
            f"rule r{rule_index} uses {variable} which its pattern does not bind",
            line=line,
            source=source,
        )
        self.variable = variable
        self.rule_index = rule_index


class CorpusFormatError(InputParseError):
    """Kinds: MalformedCorpusLine, DuplicatePairId, LineCountMismatch."""


class StripTooLongError(DeconversionError):
    kind = 'StripTooLong'

    def __init__(self, surface: str, strip: int):
        super().__init__(f"cannot strip {strip} characters from {surface!r}")
        self.surface = surface
        self.strip = strip


class FiringCapExceeded(DeconversionError):
    """Raised when a run would fire more rules than its cap allows.

    The state reached so far and the events recorded up to the cap are attached
    so callers can still linearize a partial sentence.
    """

    kind = 'FiringCapExceeded'

    def __init__(self, firing_count: int, state=None, trace=None, diagnostics=None, trace_lines=None):
        super().__init__(f"stopped after {firing_count} rule firings without reaching a fixpoint")
        self.firing_count = firing_count
        self.state = state
        self.trace = list(trace or [])
        self.trace_lines = list(trace_lines or [])
        self.diagnostics = list(diagnostics or [])


class EmptyCorpusError(DeconversionError):
    kind = 'EmptyCorpus'


class MissingFixtureError(DeconversionError):
    kind = 'MissingFixture'

    def __init__(self, path):
        super().__init__(f"fixture file not found: {path}")
        self.path = path
