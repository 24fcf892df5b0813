# lexicon/schemas/lexicon_types.py
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.diagnostics import Diagnostic
from app.lexicon.utils.constants import KEY_VALUE_SEPARATOR

# attribute -> features an entry must carry to be chosen for a node with it
CompatibilityTable = Dict[str, Tuple[str, ...]]


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    uw: str
    features: Tuple[str, ...] = ()
    line: Optional[int] = field(default=None, compare=False)

    @property
    def bare_features(self) -> Tuple[str, ...]:
        return tuple(f for f in self.features if KEY_VALUE_SEPARATOR not in f)

    @property
    def key_values(self) -> Dict[str, str]:
        pairs = (f.split(KEY_VALUE_SEPARATOR, 1) for f in self.features if KEY_VALUE_SEPARATOR in f)
        return {key: value for key, value in pairs}

    def render(self) -> str:
        return f'[{self.lemma}] "{self.uw}" ({",".join(self.features)});'


@dataclass
class Lexicon:
    """Dictionary entries grouped by headword, in declaration order."""
    entries: Dict[str, List[LexEntry]] = field(default_factory=dict)
    compatibility: CompatibilityTable = field(default_factory=dict)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    def add(self, entry: LexEntry) -> bool:
        """Append an entry; returns False when an identical entry already exists."""
        bucket = self.entries.setdefault(entry.uw, [])
        if entry in bucket:
            return False
        bucket.append(entry)
        return True

    def all_entries(self) -> List[LexEntry]:
        ordered = [entry for bucket in self.entries.values() for entry in bucket]
        return sorted(ordered, key=lambda entry: entry.line or 0)

    def __len__(self) -> int:
        return sum(len(bucket) for bucket in self.entries.values())
