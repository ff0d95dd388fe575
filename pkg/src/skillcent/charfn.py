"""Characteristic functions over bitmask coalitions, and their dense tables.

Every variant evaluates exactly: values are integers divided by a fixed
positive scale, so full-enumeration solvers can run on int64 arrays and
still emit exact rationals.  Tables silently fall back to Python big
integers when the int64 range would not be safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import CapacityError, ValidationError
from .game import SkillGame
from .graph import Graph, mask_of

__all__ = [
    "ENUM_MAX_PLAYERS", "CharacteristicFunction", "CSGValue", "VetoGame",
    "DummyGame", "CentralityExtension", "LinearCombination", "ValueTable",
    "closure_table", "harsanyi_dividends", "reconstruct_from_dividends",
]

ENUM_MAX_PLAYERS = 25

# int64 accumulators stay exact as long as every intermediate fits; the
# sweep kernels add up to 2^(n-1) table entries, so bound the table instead.
_INT64_SAFE = 1 << 61


def check_enum_capacity(n: int, what: str = "full enumeration") -> None:
    if n > ENUM_MAX_PLAYERS:
        raise CapacityError(
            f"{what} supports at most {ENUM_MAX_PLAYERS} players, got {n}; "
            "use the sampling solver instead")


class ValueTable:
    """Dense table of scaled values over all 2^n coalitions.

    ``values[mask] / scale`` is the exact value of the coalition ``mask``.
    ``values`` is an int64 ndarray when the magnitudes are safely within
    int64, otherwise a plain Python list of (big) ints.
    """

    __slots__ = ("n", "scale", "values")

    def __init__(self, n: int, scale: int, values):
        self.n = n
        self.scale = scale
        self.values = values

    @property
    def is_int64(self) -> bool:
        return isinstance(self.values, np.ndarray)

    def max_abs(self) -> int:
        if self.is_int64:
            return int(np.abs(self.values).max(initial=0))
        return max((abs(v) for v in self.values), default=0)

    def fraction(self, mask: int) -> Fraction:
        return Fraction(int(self.values[mask]), self.scale)

    def as_floats(self) -> np.ndarray:
        if self.is_int64:
            return self.values.astype(np.float64) / float(self.scale)
        return np.array([v / self.scale for v in self.values], dtype=np.float64)


class CharacteristicFunction:
    """Evaluatable map from coalitions (bitmasks) to values, with v(∅)=0."""

    n: int

    def scale(self) -> int:
        return 1

    def scaled_value(self, mask: int) -> int:
        raise NotImplementedError

    def value(self, coalition) -> Fraction:
        mask = mask_of(coalition, self.n)
        return Fraction(self.scaled_value(mask), self.scale())

    def __call__(self, coalition) -> Fraction:
        return self.value(coalition)

    def table(self) -> ValueTable:
        """Dense table by direct evaluation; subclasses vectorize."""
        check_enum_capacity(self.n)
        scale = self.scale()
        vals = [self.scaled_value(m) for m in range(1 << self.n)]
        table = ValueTable(self.n, scale, vals)
        return _maybe_int64(table)


def _maybe_int64(table: ValueTable) -> ValueTable:
    if not table.is_int64 and table.max_abs() * (1 << (table.n - 1)) < _INT64_SAFE:
        table.values = np.array(table.values, dtype=np.int64)
    return table


class CSGValue(CharacteristicFunction):
    """The characteristic function of a skill game."""

    def __init__(self, game: SkillGame):
        self.game = game
        self.n = game.n

    def scale(self) -> int:
        return self.game.profit_scale

    def scaled_value(self, mask: int) -> int:
        return self.game.scaled_value(mask)

    def table(self) -> ValueTable:
        game = self.game
        n = self.n
        check_enum_capacity(n)
        masks = np.arange(1 << n, dtype=np.int64)
        total_scaled = sum(game.scaled_profits)
        int64_ok = total_scaled * (1 << (n - 1)) < _INT64_SAFE

        # Per-skill holder popcounts give every pool count in one vector op.
        counts: dict[int, np.ndarray] = {}
        needed = sorted({s for t in game.tasks for s, c in enumerate(t.counts) if c})
        for s in needed:
            counts[s] = np.bitwise_count(masks & np.int64(game.holder_masks[s]))

        if int64_ok:
            vals = np.zeros(1 << n, dtype=np.int64)
            for j, task in enumerate(game.tasks):
                ok = np.ones(1 << n, dtype=bool)
                for s, need in enumerate(task.counts):
                    if need:
                        ok &= counts[s] >= need
                vals += np.where(ok, np.int64(game.scaled_profits[j]), np.int64(0))
            return ValueTable(n, game.profit_scale, vals)

        big = [0] * (1 << n)
        for j, task in enumerate(game.tasks):
            ok = np.ones(1 << n, dtype=bool)
            for s, need in enumerate(task.counts):
                if need:
                    ok &= counts[s] >= need
            w = game.scaled_profits[j]
            for idx in np.flatnonzero(ok):
                big[idx] += w
        return ValueTable(n, game.profit_scale, big)


class VetoGame(CharacteristicFunction):
    """Wins exactly when the coalition contains every member of S."""

    def __init__(self, n: int, members) -> None:
        self.n = n
        self.members = mask_of(members, n)
        if self.members == 0:
            raise ValidationError("veto games are defined for nonempty member sets")

    def scaled_value(self, mask: int) -> int:
        return 1 if mask & self.members == self.members else 0

    def table(self) -> ValueTable:
        check_enum_capacity(self.n)
        masks = np.arange(1 << self.n, dtype=np.int64)
        vals = (masks & np.int64(self.members) == np.int64(self.members)).astype(np.int64)
        return ValueTable(self.n, 1, vals)


class DummyGame(CharacteristicFunction):
    """Additive game: v(S) is the sum of fixed per-player weights."""

    def __init__(self, weights: Sequence[Fraction | int]):
        self.weights = tuple(Fraction(w) for w in weights)
        self.n = len(self.weights)
        self._scale = lcm(*(w.denominator for w in self.weights)) if self.weights else 1
        self._scaled = tuple(int(w * self._scale) for w in self.weights)

    def scale(self) -> int:
        return self._scale

    def scaled_value(self, mask: int) -> int:
        total = 0
        m = mask
        while m:
            low = m & -m
            total += self._scaled[low.bit_length() - 1]
            m ^= low
        return total

    def table(self) -> ValueTable:
        check_enum_capacity(self.n)
        masks = np.arange(1 << self.n, dtype=np.int64)
        if max((abs(v) for v in self._scaled), default=0) * self.n * (1 << (self.n - 1)) < _INT64_SAFE:
            vals = np.zeros(1 << self.n, dtype=np.int64)
            for i, w in enumerate(self._scaled):
                vals += np.where((masks >> i) & 1 == 1, np.int64(w), np.int64(0))
            return ValueTable(self.n, self._scale, vals)
        return _maybe_int64(ValueTable(self.n, self._scale,
                                       [self.scaled_value(m) for m in range(1 << self.n)]))


class CentralityExtension(CharacteristicFunction):
    """v_cen(S) = v(S ∪ N(S)) for a base function and a graph."""

    def __init__(self, base: CharacteristicFunction, graph: Graph):
        if base.n != graph.n:
            raise ValidationError(
                f"base function has {base.n} players but graph has {graph.n} vertices")
        self.base = base
        self.graph = graph
        self.n = base.n

    def scale(self) -> int:
        return self.base.scale()

    def scaled_value(self, mask: int) -> int:
        return self.base.scaled_value(self.graph.closure(mask))

    def table(self) -> ValueTable:
        base = self.base.table()
        cl = closure_table(self.graph)
        if base.is_int64:
            vals = base.values[cl]
        else:
            vals = [base.values[c] for c in cl]
        return ValueTable(self.n, base.scale, vals)


class LinearCombination(CharacteristicFunction):
    """Exact weighted sum of base functions (weights may be negative)."""

    def __init__(self, terms: Sequence[tuple[Fraction | int, CharacteristicFunction]]):
        if not terms:
            raise ValidationError("a linear combination needs at least one term")
        self.terms = tuple((Fraction(c), fn) for c, fn in terms)
        sizes = {fn.n for _, fn in self.terms}
        if len(sizes) != 1:
            raise ValidationError("all combined functions must share the player set")
        self.n = sizes.pop()

    def scale(self) -> int:
        return lcm(*(c.denominator * fn.scale() for c, fn in self.terms))

    def scaled_value(self, mask: int) -> int:
        scale = self.scale()
        total = 0
        for c, fn in self.terms:
            total += int(c * scale // fn.scale()) * fn.scaled_value(mask)
        return total

    def table(self) -> ValueTable:
        scale = self.scale()
        parts = [(int(c * scale // fn.scale()), fn.table()) for c, fn in self.terms]
        bound = sum(abs(f) * t.max_abs() for f, t in parts)
        if all(t.is_int64 for _, t in parts) and bound * (1 << (self.n - 1)) < _INT64_SAFE:
            vals = np.zeros(1 << self.n, dtype=np.int64)
            for f, t in parts:
                vals += np.int64(f) * t.values
            return ValueTable(self.n, scale, vals)
        size = 1 << self.n
        vals_big = [0] * size
        for f, t in parts:
            tv = t.values
            for m in range(size):
                vals_big[m] += f * int(tv[m])
        return _maybe_int64(ValueTable(self.n, scale, vals_big))


def closure_table(graph: Graph) -> np.ndarray:
    """closure_table(g)[mask] == g.closure(mask), for all 2^n masks."""
    check_enum_capacity(graph.n, "closure tables")
    masks = np.arange(1 << graph.n, dtype=np.int64)
    cl = masks.copy()
    for i in range(graph.n):
        has_i = (masks >> i) & 1 == 1
        cl[has_i] |= np.int64(graph.closed_masks[i])
    return cl


def _as_charfn(v) -> CharacteristicFunction:
    if isinstance(v, SkillGame):
        return CSGValue(v)
    if isinstance(v, CharacteristicFunction):
        return v
    raise ValidationError(f"expected a SkillGame or CharacteristicFunction, got {type(v)!r}")


def harsanyi_dividends(v, n: int | None = None) -> dict[int, Fraction]:
    """Dividends of the veto-basis decomposition v = Σ_S a_S · v_S.

    Computed as the Möbius transform a_S = Σ_{T⊆S} (−1)^{|S|−|T|} v(T)
    over exact integers; zero entries are dropped.
    """
    fn = _as_charfn(v)
    if n is not None and n != fn.n:
        raise ValidationError(f"player count {n} does not match the function's {fn.n}")
    n = fn.n
    check_enum_capacity(n, "dividend extraction")
    table = fn.table()
    size = 1 << n
    # Möbius accumulates alternating sums; widen the bound before trusting int64.
    if table.is_int64 and table.max_abs() * size < _INT64_SAFE:
        a = table.values.astype(np.int64, copy=True)
        idx = np.arange(size, dtype=np.int64)
        for i in range(n):
            has_i = (idx >> i) & 1 == 1
            a[has_i] -= a[idx[has_i] ^ (1 << i)]
        nz = np.flatnonzero(a)
        return {int(m): Fraction(int(a[m]), table.scale) for m in nz if m}
    a_big = [int(x) for x in table.values]
    for i in range(n):
        bit = 1 << i
        for m in range(size):
            if m & bit:
                a_big[m] -= a_big[m ^ bit]
    return {m: Fraction(x, table.scale) for m, x in enumerate(a_big) if x and m}


def reconstruct_from_dividends(dividends: dict[int, Fraction], n: int, coalition) -> Fraction:
    """Σ_S a_S · v_S(C): the value the stored dividends assign to a coalition."""
    mask = mask_of(coalition, n)
    total = Fraction(0)
    for s, a in dividends.items():
        if mask & s == s:
            total += a
    return total
