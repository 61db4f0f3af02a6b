"""Bundled group/action files (src/wreathhopf/data/*.grp)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import List

from .finite.groups import FiniteAction, parse_action


def bundled_names() -> List[str]:
    root = resources.files("wreathhopf") / "data"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".grp"))


def load_action(spec: str) -> FiniteAction:
    """A path to a .grp file, or the name of a bundled one (e.g. ``s3_natural``)."""
    path = Path(spec)
    if path.is_file():
        return parse_action(path.read_text(), name=path.stem)
    res = resources.files("wreathhopf") / "data" / f"{spec}.grp"
    if res.is_file():
        return parse_action(res.read_text(), name=spec)
    raise FileNotFoundError(f"no group file or bundled action named {spec!r}")
