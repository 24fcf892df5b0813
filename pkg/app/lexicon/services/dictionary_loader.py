# lexicon/services/dictionary_loader.py
"""
Dictionary file reader and writer.

One entry per line in the form ``[lemma] "uw" (F1,F2,...);``. Blank lines and
lines starting with "//" are ignored. Features of the form ``K=V`` seed the
node's key-value map at generation time; all others are bare features.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from app.diagnostics import Diagnostic
from app.exceptions import DictionaryParseError
from app.lexicon.schemas.lexicon_types import CompatibilityTable, LexEntry, Lexicon
from app.lexicon.utils.constants import DUPLICATE_ENTRY, ENTRY_LINE, FEATURE_TOKEN, MALFORMED_ENTRY
from app.text_io import normalize_source, read_source

logger = logging.getLogger(__name__)


def parse_entry(text: str, line: Optional[int] = None) -> LexEntry:
    match = ENTRY_LINE.match(text.strip())
    if not match:
        raise DictionaryParseError(MALFORMED_ENTRY, f'expected [lemma] "uw" (features); got {text.strip()!r}', line=line)

    lemma, uw = match.group('lemma'), match.group('uw').strip()
    if not lemma.strip() or not uw:
        raise DictionaryParseError(MALFORMED_ENTRY, "lemma and uw must be non-empty", line=line)

    features = []
    raw_features = match.group('features').strip()
    for raw in raw_features.split(',') if raw_features else []:
        token = raw.strip()
        if not FEATURE_TOKEN.match(token):
            raise DictionaryParseError(MALFORMED_ENTRY, f"invalid feature {raw.strip()!r}", line=line)
        if token not in features:
            features.append(token)
    return LexEntry(lemma=lemma, uw=uw, features=tuple(features), line=line)


def parse_dictionary(text: str, compatibility: Optional[CompatibilityTable] = None) -> Lexicon:
    lexicon = Lexicon(compatibility=dict(compatibility or {}))
    for number, raw in enumerate(normalize_source(text).split('\n'), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('//'):
            continue
        entry = parse_entry(stripped, number)
        if not lexicon.add(entry):
            logger.warning("Duplicate dictionary entry on line %d: %s", number, entry.render())
            lexicon.diagnostics.append(Diagnostic(
                DUPLICATE_ENTRY,
                f"{entry.render()} repeats an earlier entry and was ignored",
                line=number,
                subject=entry.uw,
            ))
    return lexicon


def load_compatibility_table(path: Union[str, Path, None]) -> CompatibilityTable:
    """Read ``attribute<TAB>feature[,feature...]`` lines; no path means an empty table."""
    table: CompatibilityTable = {}
    if not path:
        return table
    for raw in read_source(path).split('\n'):
        if not raw.strip() or raw.lstrip().startswith('#'):
            continue
        attribute, _, features = raw.partition('\t')
        table[attribute.strip().lstrip('@')] = tuple(f.strip() for f in features.split(',') if f.strip())
    logger.info("Loaded %d attribute compatibility rows from %s", len(table), path)
    return table


def load_dictionary(path: Union[str, Path], compatibility: Optional[CompatibilityTable] = None) -> Lexicon:
    try:
        lexicon = parse_dictionary(read_source(path), compatibility)
    except DictionaryParseError as exc:
        exc.source = str(path)
        raise
    logger.info("Loaded %d dictionary entries from %s", len(lexicon), path)
    return lexicon


def serialize_dictionary(lexicon: Lexicon) -> str:
    return ''.join(entry.render() + '\n' for entry in lexicon.all_entries())
