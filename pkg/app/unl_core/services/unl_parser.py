# unl_core/services/unl_parser.py
"""
Parser for UNL documents.

A file holds one or more {unl} ... {/unl} blocks with one relation per line:

    {unl}
    agt(arrive:0B.@present.@perfect., 00:01.@3.@male)
    {/unl}

Lines outside blocks (sentence headers, {org} sections) are ignored. Text
without any block marker is read as the body of a single block.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from app.exceptions import UNLParseError
from app.text_io import normalize_source, read_source
from app.unl_core.schemas.unl_types import UNLDocument, UNLNode, UNLRelation
from app.unl_core.utils.constants import (
    ATTRIBUTE_PREFIX, BLOCK_CLOSE, BLOCK_OPEN, EMPTY_UW, ID_SEPARATOR,
    INSTANCE_ID_PATTERN, LABEL_PATTERN, MALFORMED_RELATION, RELATION_LINE,
    UNBALANCED_BLOCK,
)

logger = logging.getLogger(__name__)

Line = Tuple[int, str]


def parse_node(text: str, line: Optional[int] = None) -> UNLNode:
    """Decode ``uw[:id][.@attr]*``; a trailing "." after the attributes is ignored."""
    text = text.strip()
    if text.endswith('.') and len(text) > 1:
        text = text[:-1].rstrip()

    head, *raw_attrs = text.split(ATTRIBUTE_PREFIX)
    attrs: List[str] = []
    for raw in raw_attrs:
        attr = raw.strip()
        if not attr or any(ch.isspace() for ch in attr):
            raise UNLParseError(MALFORMED_RELATION, f"invalid attribute '@{raw}' in {text!r}", line=line)
        if attr not in attrs:
            attrs.append(attr)

    uw, instance_id = head.strip(), None
    stem, sep, suffix = uw.rpartition(ID_SEPARATOR)
    if sep and INSTANCE_ID_PATTERN.match(suffix.strip()):
        uw, instance_id = stem.strip(), suffix.strip()
    if not uw:
        raise UNLParseError(EMPTY_UW, f"node {text!r} has no universal word", line=line)
    return UNLNode(uw=uw, instance_id=instance_id, attrs=tuple(attrs))


def _split_endpoints(body: str) -> List[str]:
    """Split a relation body on commas outside parentheses and quotes."""
    parts, depth, quoted, start = [], 0, False, 0
    for index, char in enumerate(body):
        if char == '"':
            quoted = not quoted
        elif quoted:
            continue
        elif char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        elif char == ',' and depth == 0:
            parts.append(body[start:index])
            start = index + 1
    parts.append(body[start:])
    return parts


def parse_relation(text: str, line: Optional[int] = None) -> UNLRelation:
    match = RELATION_LINE.match(text.strip())
    if not match:
        raise UNLParseError(MALFORMED_RELATION, f"expected label(source, target), got {text.strip()!r}", line=line)
    label = match.group('label')
    if not LABEL_PATTERN.match(label):
        raise UNLParseError(MALFORMED_RELATION, f"relation label {label!r} must be 2-3 lowercase letters", line=line)
    endpoints = _split_endpoints(match.group('body'))
    if len(endpoints) != 2:
        raise UNLParseError(
            MALFORMED_RELATION,
            f"relation {label} needs exactly two endpoints, found {len(endpoints)}",
            line=line,
        )
    source, target = (parse_node(part, line) for part in endpoints)
    return UNLRelation(label=label, source=source, target=target, line=line)


def _relations_from(lines: List[Line]) -> UNLDocument:
    relations = []
    for number, raw in lines:
        stripped = raw.strip()
        if not stripped or stripped.startswith('//'):
            continue
        relations.append(parse_relation(stripped, number))
    return UNLDocument(relations=tuple(relations))


def _is_marker(text: str, marker: str) -> bool:
    return text.strip().lower() == marker


def parse_unl_blocks(text: str) -> List[UNLDocument]:
    """Parse every {unl} block of ``text`` into a document, in file order."""
    lines = list(enumerate(normalize_source(text).split('\n'), start=1))
    if not any(_is_marker(raw, BLOCK_OPEN) or _is_marker(raw, BLOCK_CLOSE) for _, raw in lines):
        document = _relations_from(lines)
        return [document] if document.relations else []

    documents: List[UNLDocument] = []
    body: Optional[List[Line]] = None
    opened_at = 0
    for number, raw in lines:
        if _is_marker(raw, BLOCK_OPEN):
            if body is not None:
                raise UNLParseError(UNBALANCED_BLOCK, f"{BLOCK_OPEN} opened at line {opened_at} is not closed", line=number)
            body, opened_at = [], number
        elif _is_marker(raw, BLOCK_CLOSE):
            if body is None:
                raise UNLParseError(UNBALANCED_BLOCK, f"{BLOCK_CLOSE} without a matching {BLOCK_OPEN}", line=number)
            documents.append(_relations_from(body))
            body = None
        elif body is not None:
            body.append((number, raw))
    if body is not None:
        raise UNLParseError(UNBALANCED_BLOCK, f"missing {BLOCK_CLOSE}", line=opened_at)
    return documents


def parse_unl_document(text: str) -> UNLDocument:
    """Parse text holding zero or one {unl} block."""
    documents = parse_unl_blocks(text)
    if len(documents) > 1:
        raise UNLParseError(UNBALANCED_BLOCK, f"expected a single {BLOCK_OPEN} block, found {len(documents)}")
    return documents[0] if documents else UNLDocument()


def load_unl_file(path: Union[str, Path]) -> List[UNLDocument]:
    try:
        documents = parse_unl_blocks(read_source(path))
    except UNLParseError as exc:
        exc.source = str(path)
        raise
    logger.info("Loaded %d UNL sentences from %s", len(documents), path)
    return documents
