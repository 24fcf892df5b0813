# lexicon/utils/constants.py
import re

ENTRY_LINE = re.compile(r'^\[(?P<lemma>[^\]]+)\]\s*"(?P<uw>[^"]+)"\s*\((?P<features>[^()]*)\)\s*;\s*(?://.*)?$')
FEATURE_TOKEN = re.compile(r'^[^\s@=,;()]+(?:=[^\s@=,;()]+)?$')

KEY_VALUE_SEPARATOR = '='

MALFORMED_ENTRY = 'MalformedEntry'
DUPLICATE_ENTRY = 'DuplicateEntry'
SHADOWED_ENTRY = 'ShadowedEntry'

# Part-of-speech classes reported by the dictionary inventory
PART_OF_SPEECH = {
    'V': 'verbs',
    'N': 'nouns',
    'R': 'pronouns',
    'D': 'determiners',
    'J': 'adjectives',
}
OTHER_PART_OF_SPEECH = 'other'
