"""Runtime configuration read from the environment.

CONCORDIA_PRECISION  comma-separated interval-width exponents, e.g. "64,128,256"
CONCORDIA_BUDGET     realization search budget (candidate knots examined per target)
CONCORDIA_CATALOG    path to a user knot catalog merged over the bundled one
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

_DEFAULT_LADDER = (64, 128, 256)
_DEFAULT_BUDGET = 4000


def _parse_ladder(text: str) -> tuple[int, ...]:
    steps = tuple(int(s) for s in text.replace(" ", "").split(",") if s)
    if not steps or any(s <= 0 for s in steps) or list(steps) != sorted(steps):
        raise ValueError(f"bad precision ladder {text!r}")
    return steps


@dataclass(frozen=True)
class Settings:
    ladder: tuple[int, ...] = _DEFAULT_LADDER
    budget: int = _DEFAULT_BUDGET
    catalog: str | None = None

    @property
    def max_bits(self) -> int:
        return self.ladder[-1]


def from_env() -> Settings:
    s = Settings()
    if os.environ.get("CONCORDIA_PRECISION"):
        s = replace(s, ladder=_parse_ladder(os.environ["CONCORDIA_PRECISION"]))
    if os.environ.get("CONCORDIA_BUDGET"):
        s = replace(s, budget=int(os.environ["CONCORDIA_BUDGET"]))
    if os.environ.get("CONCORDIA_CATALOG"):
        s = replace(s, catalog=os.environ["CONCORDIA_CATALOG"])
    return s


_current = from_env()


def settings() -> Settings:
    return _current


def configure(**changes) -> Settings:
    """Override settings for this process (used by the CLI flags)."""
    global _current
    if "ladder" in changes and isinstance(changes["ladder"], str):
        changes["ladder"] = _parse_ladder(changes["ladder"])
    _current = replace(_current, **changes)
    return _current
