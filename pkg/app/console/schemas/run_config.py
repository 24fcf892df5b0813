# console/schemas/run_config.py
"""Launch configuration shared by the management commands."""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from django.conf import settings
from django.core.management.base import CommandError

from app.engine.schemas.state_types import EngineCaps

INPUT_ERROR = 1
GENERATION_INCOMPLETE = 2


def require_file(path: Optional[str], flag: str) -> Path:
    if not path:
        raise CommandError(f"{flag} is required", returncode=INPUT_ERROR)
    resolved = Path(path)
    if not resolved.is_file():
        raise CommandError(f"{flag}: no such file: {path}", returncode=INPUT_ERROR)
    return resolved


def resolve_workers(value: Optional[int]) -> int:
    """Worker count from ``--workers``, falling back to settings; must be positive."""
    workers = settings.DECONVERTER_WORKERS if value is None else value
    if workers < 1:
        raise CommandError(f"--workers must be at least 1, got {workers}", returncode=INPUT_ERROR)
    return workers


@dataclass(frozen=True)
class RunConfig:
    unl_path: Path
    dict_path: Path
    grammar_path: Path
    caps: EngineCaps
    output_path: Optional[Path] = None
    workers: int = 1

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> 'RunConfig':
        """Build from parsed command options; flags win over settings."""
        try:
            caps = EngineCaps.from_settings(
                max_firings=options.get('max_firings'),
                trace_level=options.get('trace'),
                collapse_spaces=False if options.get('keep_spaces') else None,
            )
        except ValueError as exc:
            raise CommandError(f"invalid engine option: {exc}", returncode=INPUT_ERROR) from exc

        output = options.get('out')
        return cls(
            unl_path=require_file(options.get('unl'), '--unl'),
            dict_path=require_file(options.get('dict_path'), '--dict'),
            grammar_path=require_file(options.get('grammar'), '--grammar'),
            caps=caps,
            output_path=Path(output) if output else None,
            workers=resolve_workers(options.get('workers')),
        )
