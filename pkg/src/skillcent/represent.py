"""Representations between centrality vectors and skill games.

Any non-negative centrality vector becomes a weighted dummy game (one
private skill and one task per player), whose every semivalue recovers the
vector.  Degree and betweenness get direct skill-game encodings whose
trivial centrality (singleton value) reproduces the classical measures;
independent BFS-based computations of both are included for cross-checks.

The betweenness encoding uses one skill per shortest path, held by the
path's interior vertices: a lone vertex then completes exactly the tasks
of paths it lies strictly inside, regardless of path length.  (Assigning
edge skills to endpoints instead only works when no shortest path is
longer than two edges.)
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, ValidationError
from .game import SkillGame, as_profit
from .graph import Graph
from .vectors import CentralityVector

__all__ = [
    "centrality_to_csg", "degree_csg", "betweenness_csg", "trivial_centrality",
    "degree_direct", "betweenness_direct",
]

PATHS_PER_PAIR_CAP = 100_000


def centrality_to_csg(values: Sequence, labels: Sequence[str] | None = None) -> SkillGame:
    """Represent a centrality vector as a weighted dummy skill game.

    Player v holds the private skill v and is the only one who can complete
    the task paying c(v); any semivalue of the result equals the input.
    Skill-game profits cannot be negative, so neither can the input.
    """
    if labels is None:
        labels = [str(i + 1) for i in range(len(values))]
    profits = []
    for lab, v in zip(labels, values):
        try:
            profits.append(as_profit(v))
        except ValidationError as exc:
            raise ValidationError(f"cannot represent centrality of player {lab!r}: {exc}") from exc
    players = [(lab, [f"own:{lab}"]) for lab in labels]
    tasks = [({f"own:{lab}": 1}, p) for lab, p in zip(labels, profits)]
    return SkillGame.build(players, tasks, name="dummy-representation")


def degree_csg(graph: Graph, labels: Sequence[str] | None = None) -> SkillGame:
    """One skill and one unit task per edge, held by the endpoints."""
    if labels is None:
        labels = [str(i + 1) for i in range(graph.n)]
    owned: list[list[str]] = [[] for _ in range(graph.n)]
    tasks = []
    for a, b in graph.edges:
        skill = f"edge:{labels[a]}-{labels[b]}"
        owned[a].append(skill)
        owned[b].append(skill)
        tasks.append(({skill: 1}, Fraction(1)))
    return SkillGame.build(list(zip(labels, owned)), tasks, name="degree-representation")


def _bfs_layers(graph: Graph, source: int) -> tuple[list[int], list[int], list[list[int]]]:
    """Distances, shortest-path counts and predecessor lists from one source."""
    n = graph.n
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[source] = 0
    sigma[source] = 1
    queue = deque([source])
    while queue:
        v = queue.popleft()
        m = graph.neighbor_masks[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return dist, sigma, preds


def _enumerate_paths(preds: list[list[int]], source: int, target: int,
                     cap: int) -> list[tuple[int, ...]]:
    """All shortest source->target paths by walking the predecessor DAG."""
    paths: list[tuple[int, ...]] = []
    stack: list[int] = [target]

    def walk(v: int) -> None:
        if v == source:
            paths.append(tuple(reversed(stack)))
            if len(paths) > cap:
                raise CapacityError(
                    f"more than {cap} shortest paths for one vertex pair")
            return
        for p in preds[v]:
            stack.append(p)
            walk(p)
            stack.pop()

    walk(target)
    return paths


def betweenness_csg(graph: Graph, labels: Sequence[str] | None = None,
                    path_cap: int = PATHS_PER_PAIR_CAP) -> SkillGame:
    """One skill and one task per shortest path, weight 1/(#paths of its pair).

    The skill of a path is held by its interior vertices, so tasks of
    length-1 paths are unachievable and contribute nothing, matching the
    zero betweenness contribution of adjacent pairs.
    """
    if labels is None:
        labels = [str(i + 1) for i in range(graph.n)]
    owned: list[list[str]] = [[] for _ in range(graph.n)]
    tasks = []
    for z1 in range(graph.n):
        dist, sigma, preds = _bfs_layers(graph, z1)
        for z2 in range(z1 + 1, graph.n):
            if sigma[z2] == 0:
                continue  # disconnected pair: no tasks, no contribution
            paths = _enumerate_paths(preds, z1, z2, path_cap)
            if len(paths) != sigma[z2]:
                raise AssertionError("path enumeration disagrees with path counting")
            weight = Fraction(1, sigma[z2])
            for k, path in enumerate(paths):
                skill = f"path:{labels[z1]}-{labels[z2]}#{k}"
                for v in path[1:-1]:
                    owned[v].append(skill)
                tasks.append(({skill: 1}, weight))
    return SkillGame.build(list(zip(labels, owned)), tasks, name="betweenness-representation")


def trivial_centrality(game: SkillGame) -> CentralityVector:
    """c(x) = v({x}): what each player completes alone."""
    values = tuple(game.value(1 << i) for i in range(game.n))
    return CentralityVector(values, measure="trivial", method="enum")


def degree_direct(graph: Graph) -> CentralityVector:
    values = tuple(Fraction(d) for d in graph.degrees())
    return CentralityVector(values, measure="degree", method="enum")


def betweenness_direct(graph: Graph) -> CentralityVector:
    """Betweenness over unordered pairs by BFS path counting.

    For each pair {z1,z2} every interior vertex v receives
    sigma(z1,v)*sigma(v,z2)/sigma(z1,z2); disconnected pairs are skipped.
    """
    n = graph.n
    dists = []
    sigmas = []
    for v in range(n):
        dist, sigma, _ = _bfs_layers(graph, v)
        dists.append(dist)
        sigmas.append(sigma)
    values = [Fraction(0)] * n
    for z1 in range(n):
        for z2 in range(z1 + 1, n):
            total = sigmas[z1][z2]
            if total == 0:
                continue
            d = dists[z1][z2]
            for v in range(n):
                if v == z1 or v == z2:
                    continue
                if dists[z1][v] >= 0 and dists[z2][v] >= 0 \
                        and dists[z1][v] + dists[z2][v] == d:
                    through = sigmas[z1][v] * sigmas[z2][v]
                    if through:
                        values[v] += Fraction(through, total)
    return CentralityVector(tuple(values), measure="betweenness", method="enum")
