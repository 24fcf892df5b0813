# evaluation/services/corpus_evaluator.py
"""
Corpus scoring.

Inputs are either one tab-separated corpus file (id, candidate, reference) or
two aligned plain-text files where line i of one pairs with line i of the
other. The aggregate is a micro-average over summed token counts.
"""

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence, Union

import pandas as pd
from django.conf import settings

from app.evaluation.schemas.report_types import EvalReport, SentencePair, SentenceScore
from app.evaluation.services.f_measure import harmonic_f, lcs_length, tokenize_surface
from app.evaluation.utils.constants import (
    CORPUS_COLUMNS, DUPLICATE_PAIR_ID, LINE_COUNT_MISMATCH, MALFORMED_CORPUS_LINE, SCORE_FORMAT,
)
from app.exceptions import CorpusFormatError, EmptyCorpusError
from app.text_io import read_source

logger = logging.getLogger(__name__)


def _ratio(common: int, total: int, other_total: int) -> float:
    if total == 0:
        return 1.0 if other_total == 0 else 0.0
    return common / total


def score_pair(pair: SentencePair) -> SentenceScore:
    candidate, reference = tokenize_surface(pair.candidate), tokenize_surface(pair.reference)
    common = lcs_length(candidate, reference)
    return SentenceScore(
        id=pair.id,
        candidate=pair.candidate,
        reference=pair.reference,
        precision=_ratio(common, len(candidate), len(reference)),
        recall=_ratio(common, len(reference), len(candidate)),
        f_measure=harmonic_f(common, len(candidate), len(reference)),
        lcs=common,
        candidate_tokens=len(candidate),
        reference_tokens=len(reference),
    )


def evaluate_corpus(pairs: Sequence[SentencePair], workers: Optional[int] = None) -> EvalReport:
    if not pairs:
        raise EmptyCorpusError("no sentence pairs to evaluate")
    seen = set()
    for pair in pairs:
        if pair.id in seen:
            raise CorpusFormatError(DUPLICATE_PAIR_ID, f"sentence id {pair.id!r} appears more than once")
        seen.add(pair.id)

    workers = settings.DECONVERTER_WORKERS if workers is None else workers
    with ThreadPoolExecutor(max_workers=workers) as executor:
        scores = sorted(executor.map(score_pair, pairs), key=lambda score: score.id)

    counts = pd.DataFrame(
        [(s.lcs, s.candidate_tokens, s.reference_tokens) for s in scores],
        columns=['lcs', 'candidate', 'reference'],
    ).sum()
    common, cand_total, ref_total = int(counts['lcs']), int(counts['candidate']), int(counts['reference'])
    report = EvalReport(
        per_sentence=scores,
        aggregate_precision=_ratio(common, cand_total, ref_total),
        aggregate_recall=_ratio(common, ref_total, cand_total),
        aggregate_f=harmonic_f(common, cand_total, ref_total),
    )
    logger.info("Scored %d sentence pairs, aggregate F %.3f", len(scores), report.aggregate_f)
    return report


def _corpus_rows(text: str, path: Union[str, Path]) -> List[str]:
    expected = len(CORPUS_COLUMNS)
    rows = []
    for number, line in enumerate(text.split('\n'), start=1):
        if not line.strip():
            continue
        fields = line.count('\t') + 1
        if fields != expected:
            raise CorpusFormatError(
                MALFORMED_CORPUS_LINE,
                f"expected id<TAB>candidate<TAB>reference, found {fields} fields",
                line=number,
                source=str(path),
            )
        rows.append(line)
    return rows


def read_corpus_file(path: Union[str, Path]) -> List[SentencePair]:
    """
    Read a tab-separated corpus of ``id<TAB>candidate<TAB>reference`` lines.

    Raises:
        CorpusFormatError: a non-blank line does not have exactly three fields.
        SourceEncodingError: the file is not valid UTF-8.
    """
    rows = _corpus_rows(read_source(path), path)
    if not rows:
        return []
    frame = pd.read_csv(
        io.StringIO('\n'.join(rows) + '\n'),
        sep='\t',
        header=None,
        names=CORPUS_COLUMNS,
        dtype=str,
        keep_default_na=False,
        quoting=csv.QUOTE_NONE,
        index_col=False,
    )
    return [SentencePair(row.id, row.candidate, row.reference) for row in frame.itertuples(index=False)]


def _read_lines(path: Union[str, Path]) -> List[str]:
    lines = read_source(path).split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    return lines


def pair_files(candidate_path: Union[str, Path], reference_path: Union[str, Path]) -> List[SentencePair]:
    candidates, references = _read_lines(candidate_path), _read_lines(reference_path)
    if len(candidates) != len(references):
        raise CorpusFormatError(
            LINE_COUNT_MISMATCH,
            f"{candidate_path} has {len(candidates)} lines but {reference_path} has {len(references)}",
            source=str(candidate_path),
        )
    width = len(str(len(candidates)))
    return [
        SentencePair(str(number).zfill(width), candidate, reference)
        for number, (candidate, reference) in enumerate(zip(candidates, references), start=1)
    ]


def report_to_tsv(report: EvalReport) -> str:
    return report.to_frame().to_csv(
        sep='\t',
        index=False,
        float_format=SCORE_FORMAT,
        quoting=csv.QUOTE_NONE,
        escapechar='\\',
        lineterminator='\n',
    )


def report_to_json(report: EvalReport) -> str:
    return json.dumps(report.summary(), ensure_ascii=False, indent=2)
