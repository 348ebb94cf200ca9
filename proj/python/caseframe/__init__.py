"""Constraint-based case-frame lexicon for Turkish verbs.

Frames go in and come out as AVM text. ``Reading.tree`` decodes the JSON
tree view on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from . import _core

__all__ = ["Lexicon", "Reading", "run_cli"]


@dataclass(frozen=True)
class Reading:
    sense: str
    rank: int
    priority: int
    specificity: int
    avm: str
    flags: list[str] = field(default_factory=list)
    tree_json: str = ""

    @property
    def tree(self) -> dict:
        return json.loads(self.tree_json)


def _readings(raw: list[dict]) -> list[Reading]:
    return [
        Reading(r["sense"], r["rank"], r["priority"], r["specificity"], r["avm"],
                list(r["flags"]), r["tree"])
        for r in raw
    ]


class Lexicon:
    """A loaded lexicon. Construction raises ValueError with the diagnostics."""

    def __init__(self, core: _core.Lexicon):
        self._core = core

    @classmethod
    def load(cls, *paths: str | Path) -> "Lexicon":
        return cls(_core.Lexicon.load([str(p) for p in paths]))

    @classmethod
    def from_source(cls, text: str, name: str = "<input>") -> "Lexicon":
        return cls(_core.Lexicon.from_source(text, name))

    @property
    def senses(self) -> list[str]:
        return self._core.senses

    def resolve(self, frame: str, depth: int = 4) -> list[Reading]:
        return _readings(self._core.resolve(frame, depth))

    def generate(self, query: str) -> list[Reading]:
        return _readings(self._core.generate(query))

    def explain(self, frame: str, sense: str) -> list[dict]:
        return self._core.explain(frame, sense)

    def format(self, frame: str) -> str:
        return self._core.format(frame)

    def dsl(self) -> str:
        return self._core.dsl()


def run_cli(args: Iterable[str]) -> tuple[int, str, str]:
    return _core.run_cli(list(args))
