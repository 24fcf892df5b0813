# unl_core/utils/validators.py
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple

from django.conf import settings

from app.diagnostics import Diagnostic
from app.unl_core.schemas.unl_types import NodeKey, UNLDocument
from app.unl_core.utils.constants import (
    DUPLICATE_NODE_CONFLICT, SELF_LOOP, UNKNOWN_RELATION_LABEL,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def load_relation_labels(path: Optional[str] = None) -> FrozenSet[str]:
    """Read the standard relation list; '#' starts a comment."""
    path = path or settings.UNL_RELATION_LABELS_FILE
    labels = set()
    with open(Path(path), 'r', encoding='utf-8') as handle:
        for raw in handle:
            label = raw.split('#', 1)[0].strip()
            if label:
                labels.add(label)
    logger.debug("Loaded %d relation labels from %s", len(labels), path)
    return frozenset(labels)


def validate_document(doc: UNLDocument, relation_labels: Optional[FrozenSet[str]] = None) -> List[Diagnostic]:
    """Check a parsed document for non-fatal problems.

    Reports unknown relation labels, self-loops, and nodes that repeat with
    different attribute sets. Nothing here stops generation.
    """
    labels = relation_labels if relation_labels is not None else load_relation_labels()
    diagnostics: List[Diagnostic] = []
    seen: Dict[NodeKey, Tuple[str, ...]] = {}
    reported = set()

    for relation in doc.relations:
        if relation.label not in labels:
            diagnostics.append(Diagnostic(
                UNKNOWN_RELATION_LABEL,
                f"relation label '{relation.label}' is not a standard UNL relation",
                line=relation.line,
                subject=relation.label,
            ))
        if relation.source.key == relation.target.key:
            diagnostics.append(Diagnostic(
                SELF_LOOP,
                f"{relation.render()} relates a node to itself",
                line=relation.line,
                subject=relation.source.render(),
            ))
        for node in (relation.source, relation.target):
            previous = seen.get(node.key)
            if previous is None or not previous:
                seen[node.key] = node.attrs
            elif node.attrs and set(node.attrs) != set(previous) and node.key not in reported:
                reported.add(node.key)
                diagnostics.append(Diagnostic(
                    DUPLICATE_NODE_CONFLICT,
                    f"{node.render()} conflicts with an earlier occurrence carrying "
                    f"{', '.join('@' + a for a in previous)}",
                    line=relation.line,
                    subject=node.uw,
                ))
    return diagnostics
