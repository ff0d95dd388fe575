"""Fixed-parameter semivalue solver.

The parameter is k, the largest total multiplicity any task requires.  For
one task, coalition pools only matter through their componentwise minimum
with the requirement, so a dynamic program over the at most 2^k capped
submultisets counts, for every size r, the coalitions avoiding the focal
player whose capped pool equals each state.  A player is pivotal exactly
when the capped pool covers everything its own skills do not, without
covering the whole requirement, which makes the semivalue a weighted sum
of a few state counts per size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import CapacityError
from .game import SkillGame, Task
from .semivalues import SemivalueSpec
from .vectors import CentralityVector

__all__ = ["SubmultisetIndex", "DPTable", "dp_counts", "fpt_semivalue"]

DEFAULT_MAX_STATE_BITS = 24


@dataclass(frozen=True)
class SubmultisetIndex:
    """Mixed-radix bijection between capped submultisets and dense integers.

    ``support`` lists the skills the requirement uses; skill ``support[d]``
    contributes digit ``(index // strides[d]) % radices[d]``.
    """

    support: tuple[int, ...]
    radices: tuple[int, ...]
    strides: tuple[int, ...]
    size: int

    @classmethod
    def for_task(cls, task: Task) -> "SubmultisetIndex":
        support = tuple(s for s, c in enumerate(task.counts) if c)
        radices = tuple(task.counts[s] + 1 for s in support)
        strides = []
        acc = 1
        for r in radices:
            strides.append(acc)
            acc *= r
        return cls(support, radices, tuple(strides), acc)

    def encode(self, digits) -> int:
        return sum(d * st for d, st in zip(digits, self.strides))

    def decode(self, index: int) -> tuple[int, ...]:
        return tuple((index // st) % r for st, r in zip(self.strides, self.radices))

    def full(self) -> int:
        return self.size - 1

    def transition(self, skill_set: frozenset[int]) -> np.ndarray:
        """Index map for absorbing a player: per-skill saturating +1."""
        idx = np.arange(self.size, dtype=np.int64)
        out = np.zeros(self.size, dtype=np.int64)
        for st, radix, skill in zip(self.strides, self.radices, self.support):
            digit = (idx // st) % radix
            if skill in skill_set:
                digit = np.minimum(digit + 1, radix - 1)
            out += digit * st
        return out

    def states_at_least(self, lower: tuple[int, ...]) -> np.ndarray:
        """Boolean mask of states dominating ``lower`` componentwise."""
        idx = np.arange(self.size, dtype=np.int64)
        ok = np.ones(self.size, dtype=bool)
        for st, radix, lo in zip(self.strides, self.radices, lower):
            ok &= (idx // st) % radix >= lo
        return ok


@dataclass(frozen=True)
class DPTable:
    """counts[r][T]: size-r coalitions avoiding the player, capped pool = T."""

    task_index: int
    player: int
    index: SubmultisetIndex
    counts: np.ndarray  # shape (n, size), exact int64

    def row_total(self, r: int) -> int:
        return int(self.counts[r].sum())


def _check_state_budget(index: SubmultisetIndex, task: Task, max_state_bits: int) -> None:
    if index.size > (1 << max_state_bits):
        raise CapacityError(
            f"task requirement of total size k={task.size()} needs {index.size} "
            f"DP states (budget 2^{max_state_bits}); reduce k or raise the budget")


def _run_dp(index: SubmultisetIndex, transitions: list[np.ndarray], n: int,
            skip: int) -> np.ndarray:
    u = np.zeros((n, index.size), dtype=np.int64)
    u[0, 0] = 1  # only the empty coalition has size 0
    filled = 0
    for p in range(n):
        if p == skip:
            continue
        trans = transitions[p]
        filled += 1
        for r in range(min(filled, n - 1), 0, -1):
            np.add.at(u[r], trans, u[r - 1])
    return u


def dp_counts(game: SkillGame, task_index: int, player: int,
              max_state_bits: int = DEFAULT_MAX_STATE_BITS) -> DPTable:
    """Run the counting DP for one (task, focal player) pair."""
    task = game.tasks[task_index]
    index = SubmultisetIndex.for_task(task)
    _check_state_budget(index, task, max_state_bits)
    transitions = [index.transition(game.skill_sets[p]) for p in range(game.n)]
    u = _run_dp(index, transitions, game.n, player)
    return DPTable(task_index, player, index, u)


def fpt_semivalue(game: SkillGame, spec: SemivalueSpec,
                  max_state_bits: int = DEFAULT_MAX_STATE_BITS) -> CentralityVector:
    """Semivalue by the per-task DP; exact, and equal to full enumeration."""
    n = game.n
    weights = spec.weights(n)
    # beta(r) / C(n-1, r), the per-coalition weight at size r
    per_size = [weights[r] / comb(n - 1, r) for r in range(n)]
    values = [Fraction(0)] * n

    for j, task in enumerate(game.tasks):
        if not task.profit:
            continue
        index = SubmultisetIndex.for_task(task)
        _check_state_budget(index, task, max_state_bits)
        transitions = [index.transition(game.skill_sets[p]) for p in range(n)]
        full = index.full()
        w = task.profit

        for i in range(n):
            lower = tuple(
                max(0, task.counts[s] - (1 if s in game.skill_sets[i] else 0))
                for s in index.support)
            if index.encode(lower) == full:
                continue  # the player's own skills never complete this task
            good = index.states_at_least(lower)
            good[full] = False
            u = _run_dp(index, transitions, n, i)
            good_counts = u[:, good].sum(axis=1)
            for r in range(n):
                c = int(good_counts[r])
                if c:
                    values[i] += w * per_size[r] * c

    return CentralityVector(tuple(values), measure=spec.measure_tag, method="fpt")
