# lexicon/utils/validators.py
from collections import Counter
from typing import Dict, List

from app.diagnostics import Diagnostic
from app.lexicon.schemas.lexicon_types import Lexicon
from app.lexicon.utils.constants import OTHER_PART_OF_SPEECH, PART_OF_SPEECH, SHADOWED_ENTRY


class LexiconValidator:
    """Checks run by check_grammar on a loaded dictionary."""

    @staticmethod
    def validate(lexicon: Lexicon) -> List[Diagnostic]:
        diagnostics = list(lexicon.diagnostics)
        for uw, bucket in lexicon.entries.items():
            if len(bucket) < 2:
                continue
            first = bucket[0]
            separating = {f for features in lexicon.compatibility.values() for f in features}
            for entry in bucket[1:]:
                if not (set(entry.features) ^ set(first.features)) & separating:
                    diagnostics.append(Diagnostic(
                        SHADOWED_ENTRY,
                        f"{entry.render()} is never chosen: lookup always prefers [{first.lemma}] for \"{uw}\"",
                        line=entry.line,
                        subject=uw,
                    ))
        return diagnostics

    @staticmethod
    def part_of_speech_counts(lexicon: Lexicon) -> Dict[str, int]:
        counts: Counter = Counter()
        for entry in lexicon.all_entries():
            tags = [PART_OF_SPEECH[f] for f in entry.bare_features if f in PART_OF_SPEECH]
            counts[tags[0] if tags else OTHER_PART_OF_SPEECH] += 1
        return dict(counts)
