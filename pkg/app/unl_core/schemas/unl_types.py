# unl_core/schemas/unl_types.py
"""Value types of a parsed UNL semantic network."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

NodeKey = Tuple[str, Optional[str]]


@dataclass(frozen=True)
class UNLNode:
    """One endpoint occurrence: headword, optional instance id, attributes.

    Instance ids are opaque tokens ("0B" and "07" are just text).
    Attributes keep their input order; duplicates are collapsed at parse time.
    """
    uw: str
    instance_id: Optional[str] = None
    attrs: Tuple[str, ...] = ()

    @property
    def key(self) -> NodeKey:
        return (self.uw, self.instance_id)

    def render(self) -> str:
        text = self.uw
        if self.instance_id:
            text += f":{self.instance_id}"
        return text + ''.join(f".@{attr}" for attr in self.attrs)


@dataclass(frozen=True)
class UNLRelation:
    label: str
    source: UNLNode
    target: UNLNode
    line: Optional[int] = field(default=None, compare=False)

    def render(self) -> str:
        return f"{self.label}({self.source.render()}, {self.target.render()})"


@dataclass(frozen=True)
class UNLDocument:
    relations: Tuple[UNLRelation, ...] = ()

    @property
    def nodes(self) -> List[UNLNode]:
        """Distinct nodes in order of first appearance, attributes unioned."""
        merged: Dict[NodeKey, List[str]] = {}
        for relation in self.relations:
            for node in (relation.source, relation.target):
                attrs = merged.setdefault(node.key, [])
                attrs.extend(a for a in node.attrs if a not in attrs)
        return [UNLNode(uw, instance_id, tuple(attrs)) for (uw, instance_id), attrs in merged.items()]

    def __len__(self) -> int:
        return len(self.relations)
