# evaluation/schemas/report_types.py
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import pandas as pd

from app.evaluation.utils.constants import AGGREGATE_ROW_ID, REPORT_COLUMNS


@dataclass(frozen=True)
class SentencePair:
    id: str
    candidate: str
    reference: str


@dataclass(frozen=True)
class SentenceScore:
    id: str
    candidate: str
    reference: str
    precision: float
    recall: float
    f_measure: float
    lcs: int
    candidate_tokens: int
    reference_tokens: int


@dataclass
class EvalReport:
    per_sentence: List[SentenceScore] = field(default_factory=list)
    aggregate_precision: float = 0.0
    aggregate_recall: float = 0.0
    aggregate_f: float = 0.0

    def to_frame(self) -> pd.DataFrame:
        """Per-sentence rows followed by the aggregate row."""
        frame = pd.DataFrame([asdict(score) for score in self.per_sentence], columns=REPORT_COLUMNS)
        aggregate = pd.DataFrame([{
            'id': AGGREGATE_ROW_ID,
            'candidate': '',
            'reference': '',
            'precision': self.aggregate_precision,
            'recall': self.aggregate_recall,
            'f_measure': self.aggregate_f,
        }], columns=REPORT_COLUMNS)
        return pd.concat([frame, aggregate], ignore_index=True)

    def summary(self) -> Dict:
        return {
            'sentences': len(self.per_sentence),
            'precision': self.aggregate_precision,
            'recall': self.aggregate_recall,
            'f_measure': self.aggregate_f,
            'per_sentence': [
                {'id': s.id, 'precision': s.precision, 'recall': s.recall, 'f_measure': s.f_measure}
                for s in self.per_sentence
            ],
        }
