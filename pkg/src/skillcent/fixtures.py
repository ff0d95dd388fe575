"""Bundled instances and small generators used across tests and the CLI."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .game import SkillGame
from .gameio import load_game
from .graph import Graph

__all__ = ["fixture_path", "wtc911", "p2_veto", "star_unanimity",
           "veto_csg", "FIXTURE_NAMES"]

FIXTURE_NAMES = ("911", "p2")
_FILES = {"911": "wtc911.net", "p2": "p2_veto.json"}


def fixture_path(name: str) -> Path:
    if name not in _FILES:
        raise KeyError(f"unknown fixture {name!r}; available: {FIXTURE_NAMES}")
    return Path(resources.files("skillcent.data") / _FILES[name])


def wtc911() -> tuple[SkillGame, Graph]:
    """The 19-node hijacker network: one task needing two M and one P."""
    game, graph = load_game(fixture_path("911"))
    assert graph is not None
    return game, graph


def p2_veto() -> tuple[SkillGame, Graph]:
    """Three-vertex path 1-2-3 with a veto game on the endpoints."""
    game, graph = load_game(fixture_path("p2"))
    assert graph is not None
    return game, graph


def veto_csg(n: int, members: list[int], labels=None) -> SkillGame:
    """The veto game on ``members`` (0-based) as a one-task skill game."""
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    players = [(labels[i], [f"u{i}"] if i in members else []) for i in range(n)]
    requirement = {f"u{i}": 1 for i in members}
    return SkillGame.build(players, [(requirement, 1)], name=f"veto-{len(members)}-of-{n}")


def star_unanimity(n: int) -> tuple[SkillGame, Graph]:
    """Star graph (center 0) with the unanimity game on all n players."""
    return veto_csg(n, list(range(n))), Graph.star(n)
