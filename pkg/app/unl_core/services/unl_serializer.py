# unl_core/services/unl_serializer.py
from app.unl_core.schemas.unl_types import UNLDocument
from app.unl_core.utils.constants import BLOCK_CLOSE, BLOCK_OPEN


def serialize_unl_document(doc: UNLDocument) -> str:
    """Canonical text: one relation per line inside a single block."""
    lines = [BLOCK_OPEN]
    lines.extend(relation.render() for relation in doc.relations)
    lines.append(BLOCK_CLOSE)
    return '\n'.join(lines) + '\n'
