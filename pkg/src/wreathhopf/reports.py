"""JSON reports shared by the command-line tools."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Report:
    command: str
    args: Dict[str, Any] = field(default_factory=dict)
    hypotheses: Dict[str, bool] = field(default_factory=dict)
    certificates: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    verdicts: Dict[str, Any] = field(default_factory=dict)
    licensed_by: Dict[str, List[str]] = field(default_factory=dict)
    exit_code: int = 0
    timing: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=_jsonable) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def verdict(self, key: str, value, licensed_by: List[str]):
        """Record a verdict together with the checks that justify it."""
        self.verdicts[key] = value
        self.licensed_by[key] = list(licensed_by)


def _jsonable(obj):
    try:
        import numpy as np
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
    except ImportError:  # pragma: no cover
        pass
    return str(obj)


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = round(time.perf_counter() - self.t0, 6)
