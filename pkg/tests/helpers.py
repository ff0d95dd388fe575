"""Seeded random instance generators for the oracle-equivalence suites."""

from __future__ import annotations

import random
from fractions import Fraction

from skillcent import Graph, SemivalueSpec, SkillGame

MAX_TASK_SIZE = 4


def random_game(rng: random.Random, n: int | None = None, max_skills: int = 4,
                max_tasks: int = 3, pure: bool = False) -> SkillGame:
    """Random CSG with total task multiplicity capped at 4 (the FPT suite's k)."""
    if n is None:
        n = rng.randint(2, 10)
    n_skills = rng.randint(1, max_skills)
    names = [f"s{i}" for i in range(n_skills)]
    players = [(str(i + 1), [s for s in names if rng.random() < 0.45]) for i in range(n)]
    tasks = []
    for _ in range(rng.randint(1, max_tasks)):
        if pure:
            req = {rng.choice(names): 1}
        else:
            chosen = rng.sample(names, rng.randint(1, n_skills))
            req = {s: rng.randint(1, 2) for s in chosen}
            while sum(req.values()) > MAX_TASK_SIZE:
                s = rng.choice(sorted(req))
                if req[s] > 1:
                    req[s] -= 1
                else:
                    del req[s]
        profit = Fraction(rng.randint(1, 6), rng.randint(1, 4))
        tasks.append((req, profit))
    return SkillGame.build(players, tasks)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.25) -> Graph:
    """Random spanning tree plus extra edges."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in edges and rng.random() < extra:
                edges.add((a, b))
    return Graph(n, sorted(edges))


def random_custom_spec(rng: random.Random, n: int) -> SemivalueSpec:
    raw = [rng.randint(0, 5) for _ in range(n)]
    if not any(raw):
        raw[0] = 1
    total = sum(raw)
    return SemivalueSpec.custom([Fraction(x, total) for x in raw])
