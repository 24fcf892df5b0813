# engine/schemas/state_types.py
"""Runtime state of one generation run."""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from django.conf import settings

from app.engine.utils.constants import TRACE_LEVELS
from app.grammar.schemas.rule_types import FlxSpec
from app.grammar.utils.constants import FLX, INFLECTED
from app.morphology.schemas.inflection_types import InflectionOutcome
from app.unl_core.schemas.unl_types import NodeKey


@dataclass
class GenNode:
    """A surface node. Features, attributes and kv behave as ordered sets/maps."""
    uid: int
    surface: str
    origin: Optional[NodeKey] = None
    features: List[str] = field(default_factory=list)
    attrs: List[str] = field(default_factory=list)
    kv: Dict[str, str] = field(default_factory=dict)
    pending_flx: Optional[FlxSpec] = None
    label: str = ''

    @property
    def is_literal(self) -> bool:
        return self.origin is None

    @property
    def inflected(self) -> bool:
        return INFLECTED in self.features

    def holds(self, token: str) -> bool:
        """A bare token holds as a feature or as the value of any key."""
        return token in self.features or token in self.kv.values()

    def has_key_value(self, key: str, value: str) -> bool:
        if key in self.kv:
            return self.kv[key] == value
        return value in self.features

    def add_feature(self, token: str):
        if token not in self.features:
            self.features.append(token)

    def remove_feature(self, token: str):
        if token in self.features:
            self.features.remove(token)
        self.kv.pop(token, None)
        if token == FLX:
            self.pending_flx = None

    def add_attr(self, name: str):
        if name not in self.attrs:
            self.attrs.append(name)

    def remove_attr(self, name: str):
        if name in self.attrs:
            self.attrs.remove(name)

    def copy(self) -> 'GenNode':
        return replace(self, features=list(self.features), attrs=list(self.attrs), kv=dict(self.kv))

    def fingerprint(self) -> tuple:
        return (
            self.uid,
            self.surface,
            self.origin,
            tuple(sorted(self.features)),
            tuple(sorted(self.attrs)),
            tuple(sorted(self.kv.items())),
            self.pending_flx,
        )

    def render(self) -> str:
        return f'"{self.surface}":{self.label}' + ''.join(f".@{attr}" for attr in self.attrs)

    def render_detail(self) -> str:
        tokens = list(self.features) + [f"{key}={value}" for key, value in self.kv.items()]
        pending = ' +paradigm' if self.pending_flx is not None else ''
        return f"{self.render()}{{{','.join(tokens)}}}{pending}"


@dataclass(frozen=True)
class GenRelation:
    label: str
    source: int
    target: int


@dataclass
class GenState:
    nodes: Dict[int, GenNode] = field(default_factory=dict)
    relations: List[GenRelation] = field(default_factory=list)
    segments: List[List[int]] = field(default_factory=list)
    next_uid: int = 0
    next_literal: int = 1

    def copy(self) -> 'GenState':
        return GenState(
            nodes={uid: node.copy() for uid, node in self.nodes.items()},
            relations=list(self.relations),
            segments=[list(segment) for segment in self.segments],
            next_uid=self.next_uid,
            next_literal=self.next_literal,
        )

    def fingerprint(self) -> tuple:
        return (
            tuple(self.relations),
            tuple(tuple(segment) for segment in self.segments),
            tuple(self.nodes[uid].fingerprint() for uid in sorted(self.nodes)),
        )

    def segment_index(self, uid: int) -> int:
        for index, segment in enumerate(self.segments):
            if uid in segment:
                return index
        raise KeyError(uid)

    def ordered_nodes(self) -> List[GenNode]:
        return [self.nodes[uid] for segment in self.segments for uid in segment]

    def render_relation(self, relation: GenRelation) -> str:
        return f"{relation.label}({self.nodes[relation.source].render()}, {self.nodes[relation.target].render()})"

    def render(self) -> str:
        segments = ' '.join(
            '[' + ' '.join(self.nodes[uid].render_detail() for uid in segment) + ']'
            for segment in self.segments
        )
        relations = '; '.join(self.render_relation(r) for r in self.relations)
        return f"{segments} | {relations}" if relations else segments


@dataclass(frozen=True)
class TraceEvent:
    step: int
    rule_index: int
    rule_text: str
    site: str
    before: str = ''
    after: str = ''
    before_hash: int = 0
    after_hash: int = 0
    inflections: Tuple[InflectionOutcome, ...] = ()


@dataclass(frozen=True)
class EngineCaps:
    max_firings: int = 1000
    trace_level: int = 0
    collapse_spaces: bool = True

    def __post_init__(self):
        if self.max_firings < 1:
            raise ValueError(f"max_firings must be at least 1, got {self.max_firings}")
        if self.trace_level not in TRACE_LEVELS:
            raise ValueError(f"trace_level must be between 0 and 4, got {self.trace_level}")

    @classmethod
    def from_settings(cls, **overrides) -> 'EngineCaps':
        values = {
            'max_firings': settings.DECONVERTER_MAX_FIRINGS,
            'trace_level': settings.DECONVERTER_TRACE_LEVEL,
            'collapse_spaces': settings.DECONVERTER_COLLAPSE_SPACES,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
