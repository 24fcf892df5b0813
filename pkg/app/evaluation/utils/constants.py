# evaluation/utils/constants.py

CORPUS_COLUMNS = ['id', 'candidate', 'reference']
SCORE_COLUMNS = ['precision', 'recall', 'f_measure']
REPORT_COLUMNS = CORPUS_COLUMNS + SCORE_COLUMNS

AGGREGATE_ROW_ID = 'AGGREGATE'
SCORE_FORMAT = '%.3f'

MALFORMED_CORPUS_LINE = 'MalformedCorpusLine'
DUPLICATE_PAIR_ID = 'DuplicatePairId'
LINE_COUNT_MISMATCH = 'LineCountMismatch'
