"""Undirected simple graphs over the player set, with bitmask neighborhoods.

Vertices are the integers ``0..n-1``; coalitions and neighborhoods are
machine-word bitmasks, which keeps every neighborhood operation O(1) words.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ValidationError

__all__ = ["Graph", "mask_of", "mask_members"]

MODEL_MAX_PLAYERS = 62


def mask_of(players: Iterable[int] | int, n: int | None = None) -> int:
    """Normalize a coalition given as a bitmask or an iterable of indices."""
    if isinstance(players, int):
        mask = players
    else:
        mask = 0
        for p in players:
            mask |= 1 << p
    if n is not None and mask >> n:
        raise ValidationError(f"coalition {bin(mask)} references players outside 0..{n - 1}")
    return mask


def mask_members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges."""

    __slots__ = ("n", "edges", "neighbor_masks", "closed_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValidationError("graph needs at least one vertex")
        if n > MODEL_MAX_PLAYERS:
            raise ValidationError(f"at most {MODEL_MAX_PLAYERS} vertices supported, got {n}")
        self.n = n
        nbr = [0] * n
        seen: set[tuple[int, int]] = set()
        canon: list[tuple[int, int]] = []
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValidationError(f"edge ({a},{b}) outside vertex range 0..{n - 1}")
            if a == b:
                raise ValidationError(f"self-loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValidationError(f"duplicate edge ({a},{b})")
            seen.add(key)
            canon.append(key)
            nbr[a] |= 1 << b
            nbr[b] |= 1 << a
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        self.neighbor_masks: tuple[int, ...] = tuple(nbr)
        self.closed_masks: tuple[int, ...] = tuple(m | (1 << i) for i, m in enumerate(nbr))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, ())

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        """Star on ``n`` vertices with vertex 0 as the center."""
        return cls(n, [(0, i) for i in range(1, n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(a, b) for a in range(n) for b in range(a + 1, n)])

    def degree(self, v: int) -> int:
        return self.neighbor_masks[v].bit_count()

    def max_degree(self) -> int:
        return max(self.neighbor_masks[v].bit_count() for v in range(self.n))

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.neighbor_masks]

    def neighborhood(self, coalition: Iterable[int] | int) -> int:
        """N(S): every vertex adjacent to some member of S (may intersect S)."""
        mask = mask_of(coalition, self.n)
        out = 0
        for v in mask_members(mask):
            out |= self.neighbor_masks[v]
        return out

    def closure(self, coalition: Iterable[int] | int) -> int:
        """S together with all its neighbors."""
        mask = mask_of(coalition, self.n)
        return mask | self.neighborhood(mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def relabel_edges(pairs: Sequence[tuple[str, str]], labels: Sequence[str]) -> list[tuple[int, int]]:
    """Map edges given as label pairs onto vertex indices."""
    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for a, b in pairs:
        if a not in index or b not in index:
            raise ValidationError(f"edge ({a!r},{b!r}) references an undeclared player")
        out.append((index[a], index[b]))
    return out
