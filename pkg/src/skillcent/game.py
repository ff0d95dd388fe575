"""Coalitional skill games.

A game has players with ordinary *sets* of skills and tasks whose
requirements are skill *multisets*; a coalition earns the profit of every
task whose requirement is covered by the coalition's pooled skills.

Skill identifiers are interned to dense integer indices at construction;
requirements and pools are dense count vectors over that index space so
that coalition sweeps can update pools in O(changed skills).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import ConfigurationError, ValidationError
from .graph import MODEL_MAX_PLAYERS, Graph, mask_members, mask_of
from .multiset import SkillMultiset

__all__ = ["SkillGame", "Task", "IncrementalEvaluator", "as_profit", "check_same_size"]


def as_profit(value) -> Fraction:
    """Convert a task profit to an exact non-negative Fraction.

    Strings are read as decimal/ratio literals ("0.25", "1/3"); floats go
    through their shortest decimal repr so that JSON round-trips stay exact.
    """
    if isinstance(value, Fraction):
        profit = value
    elif isinstance(value, bool):
        raise ValidationError(f"profit must be a number, got {value!r}")
    elif isinstance(value, int):
        profit = Fraction(value)
    elif isinstance(value, float):
        try:
            profit = Fraction(repr(value))
        except ValueError as exc:
            raise ValidationError(f"profit must be finite, got {value!r}") from exc
    elif isinstance(value, str):
        try:
            profit = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse profit {value!r}") from exc
    else:
        raise ValidationError(f"profit must be a number, got {value!r}")
    if profit < 0:
        raise ValidationError(f"profit must be non-negative, got {profit}")
    return profit


@dataclass(frozen=True)
class Task:
    """One task: dense requirement counts over the game's skill space."""

    counts: tuple[int, ...]
    profit: Fraction
    achievable: bool

    def size(self) -> int:
        return sum(self.counts)


class SkillGame:
    """Immutable skill game on players ``0..n-1``."""

    __slots__ = ("name", "labels", "skills", "skill_sets", "tasks",
                 "holder_masks", "profit_scale", "scaled_profits")

    def __init__(self, labels: Sequence[str], skills: Sequence[str],
                 skill_sets: Sequence[frozenset[int]], tasks: Sequence[Task],
                 name: str | None = None):
        n = len(labels)
        if n < 1:
            raise ValidationError("a game needs at least one player")
        if n > MODEL_MAX_PLAYERS:
            raise ValidationError(f"at most {MODEL_MAX_PLAYERS} players supported, got {n}")
        if len(set(labels)) != n:
            raise ValidationError("player ids must be unique")
        self.name = name
        self.labels = tuple(labels)
        self.skills = tuple(skills)
        self.skill_sets = tuple(frozenset(s) for s in skill_sets)
        self.tasks = tuple(tasks)

        holders = [0] * len(self.skills)
        for player, owned in enumerate(self.skill_sets):
            for s in owned:
                holders[s] |= 1 << player
        self.holder_masks = tuple(holders)

        denominators = [t.profit.denominator for t in self.tasks]
        self.profit_scale = lcm(*denominators) if denominators else 1
        self.scaled_profits = tuple(
            int(t.profit * self.profit_scale) for t in self.tasks)

    @classmethod
    def build(cls, players: Sequence[tuple[str, Iterable[str]]],
              tasks: Sequence[tuple[Mapping[str, int] | SkillMultiset, object]],
              name: str | None = None) -> "SkillGame":
        """Construct from friendly inputs, interning skill names.

        ``players`` is a sequence of (label, skill names); ``tasks`` pairs a
        requirement (mapping skill name -> count, or a SkillMultiset) with a
        profit.  Tasks whose requirement exceeds the total supply of some
        skill are accepted but flagged unachievable; empty requirements are
        rejected because they would give the empty coalition nonzero value.
        """
        skill_index: dict[str, int] = {}

        def intern(skill: str) -> int:
            if skill not in skill_index:
                skill_index[skill] = len(skill_index)
            return skill_index[skill]

        skill_sets = []
        for label, owned in players:
            skill_sets.append(frozenset(intern(s) for s in owned))

        raw_tasks = []
        for requirement, profit in tasks:
            if isinstance(requirement, SkillMultiset):
                requirement = requirement.counts
            req = {intern(s): int(m) for s, m in requirement.items() if int(m) != 0}
            if any(m < 0 for m in req.values()):
                raise ValidationError("task requirement has a negative multiplicity")
            if not req:
                raise ValidationError("task requirement must not be empty")
            raw_tasks.append((req, as_profit(profit)))

        skills = tuple(skill_index)
        n_skills = len(skills)
        supply = [0] * n_skills
        for owned in skill_sets:
            for s in owned:
                supply[s] += 1

        built = []
        for req, profit in raw_tasks:
            counts = [0] * n_skills
            for s, m in req.items():
                counts[s] = m
            achievable = all(supply[s] >= m for s, m in req.items())
            built.append(Task(tuple(counts), profit, achievable))

        labels = [label for label, _ in players]
        return cls(labels, skills, skill_sets, built, name=name)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def n_skills(self) -> int:
        return len(self.skills)

    def player_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown player id {label!r}") from None

    def skill_set(self, player: int) -> SkillMultiset:
        return SkillMultiset({self.skills[s]: 1 for s in self.skill_sets[player]})

    def unachievable_tasks(self) -> list[int]:
        return [j for j, t in enumerate(self.tasks) if not t.achievable]

    def max_task_size(self) -> int:
        """Largest total requirement multiplicity over all tasks (the FPT parameter)."""
        return max((t.size() for t in self.tasks), default=0)

    def task_requirement(self, j: int) -> SkillMultiset:
        t = self.tasks[j]
        return SkillMultiset({self.skills[s]: m for s, m in enumerate(t.counts) if m})

    # -- evaluation ----------------------------------------------------

    def pool_counts(self, coalition: Iterable[int] | int) -> list[int]:
        mask = mask_of(coalition, self.n)
        counts = [0] * self.n_skills
        for s, holders in enumerate(self.holder_masks):
            counts[s] = (mask & holders).bit_count()
        return counts

    def skill_pool(self, coalition: Iterable[int] | int) -> SkillMultiset:
        """Multiset sum of the members' skill sets: multiplicity = |S ∩ P(s)|."""
        counts = self.pool_counts(coalition)
        return SkillMultiset({self.skills[s]: c for s, c in enumerate(counts) if c})

    def scaled_value(self, coalition: Iterable[int] | int) -> int:
        """Coalition value multiplied by ``profit_scale`` (an exact integer)."""
        mask = mask_of(coalition, self.n)
        total = 0
        for j, task in enumerate(self.tasks):
            ok = True
            for s, need in enumerate(task.counts):
                if need and (mask & self.holder_masks[s]).bit_count() < need:
                    ok = False
                    break
            if ok:
                total += self.scaled_profits[j]
        return total

    def value(self, coalition: Iterable[int] | int) -> Fraction:
        """v(S): summed profits of the tasks S can complete."""
        return Fraction(self.scaled_value(coalition), self.profit_scale)

    def cen_value(self, graph: Graph, coalition: Iterable[int] | int) -> Fraction:
        """v(S ∪ N(S)): the coalition evaluated together with its neighbors."""
        check_same_size(self, graph)
        return self.value(graph.closure(coalition))

    def grand_value(self) -> Fraction:
        return self.value((1 << self.n) - 1)


def check_same_size(game: SkillGame, graph: Graph) -> None:
    if graph.n != game.n:
        raise ConfigurationError(
            f"graph has {graph.n} vertices but the game has {game.n} players")


class IncrementalEvaluator:
    """Tracks v(S) under single-player insertions and removals.

    Maintains per-skill pool counts and per-task deficit counters so each
    update costs O(skills of the moved player x tasks using them).  Values
    are returned in profit-scaled integer form.
    """

    __slots__ = ("game", "_counts", "_deficits", "_value", "_members", "_by_skill")

    def __init__(self, game: SkillGame):
        self.game = game
        self._by_skill: list[list[tuple[int, int]]] = [[] for _ in range(game.n_skills)]
        for j, task in enumerate(game.tasks):
            for s, need in enumerate(task.counts):
                if need:
                    self._by_skill[s].append((j, need))
        self.reset()

    def reset(self) -> None:
        game = self.game
        self._counts = [0] * game.n_skills
        self._deficits = [sum(1 for c in t.counts if c) for t in game.tasks]
        self._value = 0
        for j, task in enumerate(game.tasks):
            if self._deficits[j] == 0:
                self._value += game.scaled_profits[j]
        self._members = 0

    @property
    def scaled_value(self) -> int:
        return self._value

    def add(self, player: int) -> None:
        bit = 1 << player
        if self._members & bit:
            return
        self._members |= bit
        for s in self.game.skill_sets[player]:
            c = self._counts[s] = self._counts[s] + 1
            for j, need in self._by_skill[s]:
                if c == need:
                    self._deficits[j] -= 1
                    if self._deficits[j] == 0:
                        self._value += self.game.scaled_profits[j]

    def remove(self, player: int) -> None:
        bit = 1 << player
        if not (self._members & bit):
            return
        self._members &= ~bit
        for s in self.game.skill_sets[player]:
            c = self._counts[s]
            self._counts[s] = c - 1
            for j, need in self._by_skill[s]:
                if c == need:
                    if self._deficits[j] == 0:
                        self._value -= self.game.scaled_profits[j]
                    self._deficits[j] += 1

    def value_with(self, extra: int) -> int:
        """Scaled value of current members plus the ``extra`` mask, restored afterwards."""
        added = [p for p in mask_members(extra & ~self._members)]
        for p in added:
            self.add(p)
        out = self._value
        for p in added:
            self.remove(p)
        return out
