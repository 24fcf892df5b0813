# console/services/inputs.py
from pathlib import Path
from typing import Iterable, Union

from django.conf import settings
from django.core.management.base import CommandError

from app.console.schemas.run_config import INPUT_ERROR
from app.diagnostics import Diagnostic
from app.exceptions import InputParseError
from app.grammar.schemas.rule_types import Grammar
from app.grammar.services.rule_parser import load_grammar
from app.lexicon.schemas.lexicon_types import Lexicon
from app.lexicon.services.dictionary_loader import load_compatibility_table, load_dictionary


def load_lexicon_or_fail(path: Union[str, Path]) -> Lexicon:
    try:
        compatibility = load_compatibility_table(settings.LEXICON_COMPATIBILITY_FILE)
        return load_dictionary(path, compatibility)
    except InputParseError as exc:
        raise CommandError(str(exc), returncode=INPUT_ERROR) from exc
    except OSError as exc:
        raise CommandError(f"cannot read dictionary: {exc}", returncode=INPUT_ERROR) from exc


def load_grammar_or_fail(path: Union[str, Path]) -> Grammar:
    try:
        return load_grammar(path)
    except InputParseError as exc:
        raise CommandError(str(exc), returncode=INPUT_ERROR) from exc
    except OSError as exc:
        raise CommandError(f"cannot read grammar: {exc}", returncode=INPUT_ERROR) from exc


def write_diagnostics(stream, diagnostics: Iterable[Diagnostic], source=None):
    for diagnostic in diagnostics:
        stream.write(diagnostic.render(str(source) if source else None))
