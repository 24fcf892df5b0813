# grammar/utils/constants.py
import re

FLX = 'FLX'
INFLECTED = 'inflected'

DRULES_OPEN = '{drules}'
DRULES_CLOSE = '{/drules}'

LABEL_PATTERN = re.compile(r'^[a-z]{2,3}$')

# Error kinds
SYNTAX_ERROR = 'SyntaxError'
EMPTY_CONDITION = 'EmptyCondition'
EMPTY_RULE = 'EmptyRule'

# Diagnostic kinds
NOT_EXECUTED = 'NotExecuted'
UNUSED_PARADIGM_TAG = 'UnusedParadigmTag'
NO_OP_RULE = 'NoOpRule'
SHADOWED_CASE = 'ShadowedCase'
UNUSED_VARIABLE = 'UnusedVariable'
