"""Game and graph serialization.

Two on-disk formats are supported:

* GameFile: a JSON object with ``players`` (id + skill list), ``tasks``
  (skill->count requirement and a profit), optional ``edges`` (pairs of
  player ids) and an optional ``name``.  Profits may be integers, decimal
  numbers or exact ratio strings like "1/3"; serialization writes ratios
  back as strings so that parse -> serialize -> parse is the identity.

* Legacy network file: the four-line header format for two-skill
  attack-scenario instances (counts; martial-artist ids; pilot ids;
  required pilots and martial artists) followed by one edge per line.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError, ValidationError
from .game import SkillGame
from .graph import Graph, relabel_edges

__all__ = ["parse_game_json", "serialize_game", "parse_legacy",
           "load_game", "dump_game"]

MARTIAL_SKILL = "M"
PILOT_SKILL = "P"


def _profit_to_json(profit: Fraction):
    if profit.denominator == 1:
        return int(profit)
    return f"{profit.numerator}/{profit.denominator}"


def serialize_game(game: SkillGame, graph: Graph | None = None) -> dict:
    doc: dict = {}
    if game.name:
        doc["name"] = game.name
    doc["players"] = [
        {"id": lab, "skills": sorted(game.skills[s] for s in game.skill_sets[i])}
        for i, lab in enumerate(game.labels)
    ]
    doc["tasks"] = [
        {"requires": game.task_requirement(j).counts,
         "profit": _profit_to_json(task.profit)}
        for j, task in enumerate(game.tasks)
    ]
    if graph is not None:
        doc["edges"] = [[game.labels[a], game.labels[b]] for a, b in graph.edges]
    return doc


def parse_game_json(doc: dict) -> tuple[SkillGame, Graph | None]:
    if not isinstance(doc, dict):
        raise ValidationError("game document must be a JSON object")
    players_raw = doc.get("players")
    if not isinstance(players_raw, list) or not players_raw:
        raise ValidationError("game document needs a non-empty 'players' list")
    players = []
    for entry in players_raw:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ValidationError(f"bad player entry: {entry!r}")
        pid = str(entry["id"])
        skills = entry.get("skills", [])
        if not isinstance(skills, list):
            raise ValidationError(f"player {pid!r}: 'skills' must be a list")
        players.append((pid, [str(s) for s in skills]))

    tasks = []
    for entry in doc.get("tasks", []):
        if not isinstance(entry, dict) or "requires" not in entry:
            raise ValidationError(f"bad task entry: {entry!r}")
        requires = entry["requires"]
        if not isinstance(requires, dict):
            raise ValidationError(f"task requirement must be an object: {entry!r}")
        profit = entry.get("profit", 1)
        tasks.append(({str(s): int(c) for s, c in requires.items()}, profit))

    game = SkillGame.build(players, tasks, name=doc.get("name"))
    graph = None
    if "edges" in doc:
        pairs = [(str(a), str(b)) for a, b in doc["edges"]]
        graph = Graph(game.n, relabel_edges(pairs, game.labels))
    return game, graph


def parse_legacy(path: str | Path) -> tuple[SkillGame, Graph]:
    """Parse a legacy network file into a single-task two-skill game + graph."""
    lines = Path(path).read_text().splitlines()

    def ints(lineno: int, expect: int | None = None) -> list[int]:
        if lineno > len(lines):
            raise ParseError("file ends too early", lineno)
        try:
            vals = [int(tok) for tok in lines[lineno - 1].split()]
        except ValueError:
            raise ParseError(f"expected integers, got {lines[lineno - 1]!r}", lineno) from None
        if expect is not None and len(vals) != expect:
            raise ParseError(f"expected {expect} integers, got {len(vals)}", lineno)
        return vals

    n, martial_count, pilot_count, edge_count = ints(1, 4)
    if n < 1:
        raise ParseError(f"bad player count {n}", 1)
    martial = ints(2)
    if len(martial) != martial_count:
        raise ParseError(f"line 1 announces {martial_count} martial artists, found {len(martial)}", 2)
    pilots = ints(3)
    if len(pilots) != pilot_count:
        raise ParseError(f"line 1 announces {pilot_count} pilots, found {len(pilots)}", 3)
    required_pilots, required_martial = ints(4, 2)

    for lineno, ids in ((2, martial), (3, pilots)):
        for x in ids:
            if not 1 <= x <= n:
                raise ParseError(f"node id {x} outside 1..{n}", lineno)

    edges = []
    for offset, raw in enumerate(lines[4:], start=5):
        if not raw.strip():
            continue
        vals = ints(offset, 2)
        a, b = vals
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"edge endpoint outside 1..{n}", offset)
        edges.append((a - 1, b - 1))
    if len(edges) != edge_count:
        raise ParseError(
            f"line 1 announces {edge_count} edges, found {len(edges)}", len(lines))

    labels = [str(i + 1) for i in range(n)]
    owned: list[list[str]] = [[] for _ in range(n)]
    for x in martial:
        owned[x - 1].append(MARTIAL_SKILL)
    for x in pilots:
        owned[x - 1].append(PILOT_SKILL)
    requirement = {}
    if required_martial:
        requirement[MARTIAL_SKILL] = required_martial
    if required_pilots:
        requirement[PILOT_SKILL] = required_pilots
    game = SkillGame.build(list(zip(labels, owned)), [(requirement, 1)],
                           name=Path(path).stem)
    try:
        graph = Graph(n, edges)
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc
    return game, graph


def load_game(path: str | Path) -> tuple[SkillGame, Graph | None]:
    """Load either format, sniffing JSON by its leading brace."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_game_json(json.loads(text, parse_float=Fraction))
    return parse_legacy(path)


def dump_game(game: SkillGame, graph: Graph | None, path: str | Path) -> None:
    Path(path).write_text(json.dumps(serialize_game(game, graph), indent=2) + "\n")
