# engine/utils/constants.py

TRACE_OUTPUT_ONLY = 0
TRACE_PHASES = 1
TRACE_FIRINGS = 2
TRACE_STATES = 3
TRACE_ATTEMPTS = 4
TRACE_LEVELS = range(TRACE_OUTPUT_ONLY, TRACE_ATTEMPTS + 1)

LITERAL_ID_PREFIX = '-:'

# Diagnostic kinds
UNKNOWN_UW = 'UnknownUW'
UNRESOLVED_RELATIONS = 'UnresolvedRelations'
FIRING_CAP = 'FiringCapExceeded'
STRIP_TOO_LONG = 'StripTooLong'
