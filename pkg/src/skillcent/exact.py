"""Ground-truth solvers by full coalition enumeration.

Marginal contributions are accumulated per coalition size as exact scaled
integers (int64 arrays when safe, Python big integers otherwise), then
combined with exact rational weights, so results are exact Fractions and
independent of worker count by construction.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .charfn import (CSGValue, CentralityExtension, CharacteristicFunction,
                     ValueTable, _INT64_SAFE, _as_charfn, check_enum_capacity)
from .errors import CapacityError, ValidationError
from .game import SkillGame, check_same_size
from .graph import Graph, mask_members
from .semivalues import SemivalueSpec
from .vectors import CentralityVector

__all__ = [
    "exact_semivalue", "exact_shapley", "exact_cen_shapley", "exact_hsh",
    "exact_help", "exact_hc", "DeltaStar", "delta_star", "equivalence_classes",
]


def _bases_without(n: int, i: int) -> np.ndarray:
    """All 2^(n-1) coalition masks over n players with player i absent."""
    x = np.arange(1 << (n - 1), dtype=np.int64)
    low = x & np.int64((1 << i) - 1)
    return ((x >> i) << (i + 1)) | low


def _per_size_sums(table: ValueTable, i: int, plus_mask: int, minus_mask: int) -> list[int]:
    """sums[k] = Σ over |C|=k, i∉C of (v(C|plus) - v(C|minus)), scaled ints."""
    n = table.n
    if table.is_int64 and table.max_abs() * (1 << n) < _INT64_SAFE:
        base = _bases_without(n, i)
        sizes = np.bitwise_count(base).astype(np.intp)
        marg = table.values[base | np.int64(plus_mask)] - table.values[base | np.int64(minus_mask)]
        sums = np.zeros(n, dtype=np.int64)
        np.add.at(sums, sizes, marg)
        return [int(s) for s in sums]
    values = table.values
    sums_big = [0] * n
    lowbits = (1 << i) - 1
    for x in range(1 << (n - 1)):
        base = ((x >> i) << (i + 1)) | (x & lowbits)
        sums_big[base.bit_count()] += int(values[base | plus_mask]) - int(values[base | minus_mask])
    return sums_big


def _combine(sums: list[int], scale: int, weights: list[Fraction], n: int) -> Fraction:
    total = Fraction(0)
    for k in range(n):
        if sums[k]:
            total += weights[k] * Fraction(sums[k], comb(n - 1, k))
    return total / scale


def _sweep_all(table: ValueTable, plus_masks, minus_masks, weights, threads=None) -> tuple[Fraction, ...]:
    n = table.n

    def one(i: int) -> Fraction:
        sums = _per_size_sums(table, i, plus_masks[i], minus_masks[i])
        return _combine(sums, table.scale, weights, n)

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return tuple(pool.map(one, range(n)))
    return tuple(one(i) for i in range(n))


def exact_semivalue(v, spec: SemivalueSpec, threads: int | None = None) -> CentralityVector:
    """Semivalue of every player by full coalition enumeration.

    For the Shapley family this equals the permutation average; component
    sums equal v(N) exactly for Shapley weights.
    """
    fn = _as_charfn(v)
    check_enum_capacity(fn.n)
    table = fn.table()
    weights = spec.weights(fn.n)
    bits = [1 << i for i in range(fn.n)]
    zeros = [0] * fn.n
    values = _sweep_all(table, bits, zeros, weights, threads)
    return CentralityVector(values, measure=spec.measure_tag, method="enum")


def exact_shapley(v, threads: int | None = None) -> CentralityVector:
    return exact_semivalue(v, SemivalueSpec.shapley(), threads)


def _hsh_table_and_masks(game_or_fn, graph: Graph):
    fn = _as_charfn(game_or_fn)
    if isinstance(game_or_fn, SkillGame):
        check_same_size(game_or_fn, graph)
    elif fn.n != graph.n:
        raise ValidationError(
            f"function has {fn.n} players but graph has {graph.n} vertices")
    check_enum_capacity(fn.n)
    return fn.table(), graph.closed_masks


def exact_hsh(v, graph: Graph, threads: int | None = None) -> CentralityVector:
    """Helping Shapley value: marginal of joining together with one's neighbors.

    Uses the coalition form with factorial weights |C|!(n-|C|-1)!/n!, which
    equals the average over all player orderings without enumerating them.
    """
    table, closed = _hsh_table_and_masks(v, graph)
    n = table.n
    weights = SemivalueSpec.shapley().weights(n)
    values = _sweep_all(table, closed, [0] * n, weights, threads)
    return CentralityVector(values, measure="hsh", method="enum")


def exact_help(v, graph: Graph, threads: int | None = None) -> CentralityVector:
    """Help = HSh - Sh, computed in one sweep as the weighted sum of
    v(C ∪ {x} ∪ N(x)) - v(C ∪ {x})."""
    table, closed = _hsh_table_and_masks(v, graph)
    n = table.n
    weights = SemivalueSpec.shapley().weights(n)
    bits = [1 << i for i in range(n)]
    values = _sweep_all(table, closed, bits, weights, threads)
    return CentralityVector(values, measure="help", method="enum")


def exact_cen_shapley(v, graph: Graph, threads: int | None = None) -> CentralityVector:
    """Shapley value of the extension v_cen(S) = v(S ∪ N(S))."""
    fn = _as_charfn(v)
    cen = CentralityExtension(fn, graph)
    out = exact_semivalue(cen, SemivalueSpec.shapley(), threads)
    return CentralityVector(out.values, measure="cen-sh", method="enum")


@dataclass(frozen=True)
class DeltaStar:
    """Scaling constant for the Shapley-based helping centrality.

    ``witness`` is a coalition achieving the maximum in definition mode.
    """

    value: Fraction
    mode: str
    witness: tuple[int, ...] | None = None


def delta_star(game: SkillGame, graph: Graph, mode="definition",
               subset_cap: int = 1_000_000) -> DeltaStar:
    """Resolve the HC scaling constant.

    definition: max over tasks t, skills s in t, and coalitions C ⊆ P(s)
    with |C| = n_s - k_{s,t} + 1 of the external neighborhood size
    |N(C) \\ C|.  maxdeg: the maximum vertex degree.  A number: taken as
    given (override).
    """
    check_same_size(game, graph)
    if isinstance(mode, (int, float, Fraction)):
        value = Fraction(mode) if not isinstance(mode, float) else Fraction(repr(mode))
        if value <= 0:
            raise ValueError(f"delta-star override must be positive, got {mode}")
        return DeltaStar(value, "override")
    if mode == "maxdeg":
        return DeltaStar(Fraction(graph.max_degree()), "maxdeg")
    if mode != "definition":
        raise ValueError(f"unknown delta-star mode {mode!r}")

    best = -1
    witness: tuple[int, ...] | None = None
    for task in game.tasks:
        for s, need in enumerate(task.counts):
            if not need:
                continue
            holders = mask_members(game.holder_masks[s])
            size = len(holders) - need + 1
            if size < 0:
                continue  # unachievable: no near-critical coalition exists
            count = comb(len(holders), size)
            if count > subset_cap:
                raise CapacityError(
                    f"definition-mode delta-star needs {count} subsets of the "
                    f"{len(holders)} holders of {game.skills[s]!r} (cap {subset_cap}); "
                    "use maxdeg or an override value")
            for members in combinations(holders, size):
                cmask = 0
                nmask = 0
                for p in members:
                    cmask |= 1 << p
                    nmask |= graph.neighbor_masks[p]
                outside = (nmask & ~cmask).bit_count()
                if outside > best:
                    best = outside
                    witness = members
    if best < 0:
        return DeltaStar(Fraction(0), "definition")
    return DeltaStar(Fraction(best), "definition", witness)


def exact_hc(game_or_fn, graph: Graph, delta: DeltaStar | int | float | Fraction,
             threads: int | None = None) -> CentralityVector:
    """HC(x) = (1 + 1/Δ*)·Sh[v_cen](x) − (1/Δ*)·Sh[v](x).

    Component sums equal v(N) for every positive Δ* because both Shapley
    vectors are efficient.
    """
    d = delta.value if isinstance(delta, DeltaStar) else Fraction(delta)
    if d <= 0:
        raise ValueError(f"delta-star must be positive, got {d}")
    sh = exact_shapley(game_or_fn, threads)
    cen = exact_cen_shapley(game_or_fn, graph, threads)
    values = tuple((1 + 1 / d) * c - s / d for s, c in zip(sh.values, cen.values))
    return CentralityVector(values, measure="hc", method="enum", delta_star=d)


def equivalence_classes(game: SkillGame, graph: Graph) -> list[list[int]]:
    """Partition players by (own skill set, multiset of neighbors' skill sets).

    Neighbors without any skill are left out of the multiset: they never
    change what a player's neighborhood can contribute to a task pool, and
    keeping them would split groups whose members differ only in how many
    skill-less contacts they have.
    """
    check_same_size(game, graph)
    classes: dict[tuple, list[int]] = {}
    own = [tuple(sorted(game.skills[s] for s in game.skill_sets[i])) for i in range(game.n)]
    for i in range(game.n):
        fam = sorted(own[j] for j in mask_members(graph.neighbor_masks[i]) if own[j])
        classes.setdefault((own[i], tuple(fam)), []).append(i)
    return sorted(classes.values(), key=lambda grp: grp[0])
