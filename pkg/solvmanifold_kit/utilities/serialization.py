"""
Deterministic JSON for command results.

Exact scalars are written in their text grammar, bidegree keys as "p,q", and
mappings with sorted keys, so equal results always give identical bytes.
"""

import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..domain.gaussian import GaussianRational
from ..domain.quadratic import QuadraticScalar


def _key(key: Any) -> str:
    if isinstance(key, tuple):
        return ",".join(str(part) for part in key)
    if isinstance(key, Enum):
        return str(key.value)
    return str(key)


def to_jsonable(value: Any) -> Any:
    """Recursively convert results into plain JSON types."""
    if value is None or isinstance(value, bool | int | str):
        return value
    if isinstance(value, Fraction | GaussianRational | QuadraticScalar):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(asdict(value))
    if isinstance(value, dict):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [to_jsonable(item) for item in value]
    if isinstance(value, set | frozenset):
        return sorted(to_jsonable(item) for item in value)
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def dumps(value: Any) -> str:
    """Stable JSON text with sorted keys and a trailing newline."""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: Path, value: Any) -> Path:
    """Write ``dumps(value)`` to ``path``, creating parent directories."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(value), encoding="utf-8")
    return path
