# unl_core/utils/constants.py
import re

BLOCK_OPEN = '{unl}'
BLOCK_CLOSE = '{/unl}'

ATTRIBUTE_PREFIX = '.@'
ID_SEPARATOR = ':'

# Error kinds
UNBALANCED_BLOCK = 'UnbalancedBlock'
MALFORMED_RELATION = 'MalformedRelation'
EMPTY_UW = 'EmptyUW'

# Diagnostic kinds
DUPLICATE_NODE_CONFLICT = 'DuplicateNodeConflict'
UNKNOWN_RELATION_LABEL = 'UnknownRelationLabel'
SELF_LOOP = 'SelfLoop'

RELATION_LINE = re.compile(r'^(?P<label>[A-Za-z]+)\s*\((?P<body>.*)\)\s*;?$')
LABEL_PATTERN = re.compile(r'^[a-z]{2,3}$')
INSTANCE_ID_PATTERN = re.compile(r'^[0-9A-Za-z]+$')
