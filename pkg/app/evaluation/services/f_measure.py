# evaluation/services/f_measure.py
"""Token-level LCS precision, recall and F-measure."""

import unicodedata
from typing import List, Sequence

import numpy as np


def tokenize_surface(text: str) -> List[str]:
    return unicodedata.normalize('NFC', text).split()


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    if not a or not b:
        return 0
    table = np.zeros((len(a) + 1, len(b) + 1), dtype=np.int64)
    for i, token_a in enumerate(a, start=1):
        for j, token_b in enumerate(b, start=1):
            if token_a == token_b:
                table[i, j] = table[i - 1, j - 1] + 1
            else:
                table[i, j] = max(table[i - 1, j], table[i, j - 1])
    return int(table[len(a), len(b)])


def harmonic_f(common: int, candidate_total: int, reference_total: int) -> float:
    """2·LCS / (|cand| + |ref|), which equals 2PR/(P+R) whenever both are defined."""
    if candidate_total == 0 and reference_total == 0:
        return 1.0
    if common == 0:
        return 0.0
    return 2.0 * common / (candidate_total + reference_total)


def f_measure(candidate: str, reference: str) -> float:
    cand_tokens, ref_tokens = tokenize_surface(candidate), tokenize_surface(reference)
    return harmonic_f(lcs_length(cand_tokens, ref_tokens), len(cand_tokens), len(ref_tokens))
