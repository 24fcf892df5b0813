# lexicon/services/lookup.py
from typing import Iterable, List

from app.lexicon.schemas.lexicon_types import LexEntry, Lexicon


def is_compatible(entry: LexEntry, attrs: Iterable[str], lexicon: Lexicon) -> bool:
    """Check that ``entry`` carries every feature the compatibility table requires for ``attrs``.

    Attributes with no table row impose nothing.
    """
    for attr in attrs:
        required = lexicon.compatibility.get(attr, ())
        if any(feature not in entry.features for feature in required):
            return False
    return True


def lookup(lexicon: Lexicon, uw: str, attrs: Iterable[str] = ()) -> List[LexEntry]:
    """Entries for ``uw`` in declaration order, filtered by the compatibility table."""
    attrs = tuple(attrs)
    return [entry for entry in lexicon.entries.get(uw, []) if is_compatible(entry, attrs, lexicon)]
