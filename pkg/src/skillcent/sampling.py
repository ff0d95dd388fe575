"""Seeded Monte Carlo permutation estimators.

Permutations are drawn in fixed-size blocks, each from its own substream
derived from (master seed, block index), and block statistics are reduced
in block order.  The sample set and the estimates therefore depend only on
(seed, sample count): worker count changes scheduling, never results.

For games within the enumeration limit all marginals are table lookups on
a dense float64 value table; larger games fall back to a per-permutation
sweep with incremental skill pools.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .charfn import CSGValue, CentralityExtension, ENUM_MAX_PLAYERS
from .exact import DeltaStar
from .game import IncrementalEvaluator, SkillGame, check_same_size
from .graph import Graph, mask_members
from .vectors import CentralityVector

__all__ = ["SampleConfig", "sample_measure", "SAMPLED_MEASURES"]

SAMPLED_MEASURES = ("sh", "hsh", "help", "cen-sh", "hc")
BLOCK_SIZE = 4096


@dataclass(frozen=True)
class SampleConfig:
    """Sampling parameters; identical (seed, samples) imply identical output."""

    samples: int
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError(f"need at least 2 samples for a standard error, got {self.samples}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"worker count must be >= 1, got {self.workers}")


def _block_sizes(m: int) -> list[int]:
    full, rest = divmod(m, BLOCK_SIZE)
    return [BLOCK_SIZE] * full + ([rest] if rest else [])


def _block_rng(seed: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(block,))
    return np.random.Generator(np.random.PCG64(ss))


def _permutations(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    base = np.tile(np.arange(n, dtype=np.int64), (count, 1))
    return rng.permuted(base, axis=1)


def _table_block_stats(perms: np.ndarray, n: int, measure: str, vt, vtc,
                       closed: np.ndarray, delta: float):
    """Per-player (sum, sum of squares) over one block, via table lookups."""
    bits = np.int64(1) << perms
    incl = np.bitwise_or.accumulate(bits, axis=1)
    pre = np.empty_like(incl)
    pre[:, 0] = 0
    pre[:, 1:] = incl[:, :-1]

    if measure == "sh":
        stat = vt[pre | bits] - vt[pre]
    elif measure == "hsh":
        stat = vt[pre | closed[perms]] - vt[pre]
    elif measure == "help":
        stat = vt[pre | closed[perms]] - vt[pre | bits]
    elif measure == "cen-sh":
        stat = vtc[pre | bits] - vtc[pre]
    else:  # hc: both terms share the permutation (variance-reducing coupling)
        cen = vtc[pre | bits] - vtc[pre]
        sh = vt[pre | bits] - vt[pre]
        stat = (1.0 + 1.0 / delta) * cen - sh / delta

    flat = perms.ravel()
    stat = stat.ravel()
    sums = np.bincount(flat, weights=stat, minlength=n)
    sqs = np.bincount(flat, weights=stat * stat, minlength=n)
    return sums, sqs


def _sweep_block_stats(perms: np.ndarray, game: SkillGame, graph: Graph | None,
                       measure: str, delta: float):
    """Fallback for games beyond the table limit: incremental left-to-right sweeps.

    The closure of the prefix only ever grows along a permutation, so the
    extension value is tracked by a second evaluator that absorbs newly
    covered vertices and never removes any.
    """
    n = game.n
    ev = IncrementalEvaluator(game)
    closed = graph.closed_masks if graph is not None else [1 << i for i in range(n)]
    needs_cen = measure in ("cen-sh", "hc")
    cen_ev = IncrementalEvaluator(game) if needs_cen else None
    scale = float(game.profit_scale)
    sums = [0.0] * n
    sqs = [0.0] * n
    for row in perms:
        ev.reset()
        if needs_cen:
            cen_ev.reset()
            cl_mask = 0
        for x in map(int, row):
            v_pre = ev.scaled_value
            if measure == "sh":
                ev.add(x)
                stat = (ev.scaled_value - v_pre) / scale
            elif measure == "hsh":
                stat = (ev.value_with(closed[x]) - v_pre) / scale
                ev.add(x)
            elif measure == "help":
                ev.add(x)
                stat = (ev.value_with(closed[x]) - ev.scaled_value) / scale
            else:
                cen_pre = cen_ev.scaled_value
                for p in mask_members(closed[x] & ~cl_mask):
                    cen_ev.add(p)
                cl_mask |= closed[x]
                cen_marg = (cen_ev.scaled_value - cen_pre) / scale
                ev.add(x)
                if measure == "cen-sh":
                    stat = cen_marg
                else:
                    stat = (1.0 + 1.0 / delta) * cen_marg - (ev.scaled_value - v_pre) / scale / delta
            sums[x] += stat
            sqs[x] += stat * stat
    return np.array(sums), np.array(sqs)


def sample_measure(game: SkillGame, graph: Graph | None, measure: str,
                   cfg: SampleConfig,
                   delta: DeltaStar | int | float | Fraction | None = None) -> CentralityVector:
    """Monte Carlo estimate with per-player standard errors s/sqrt(m).

    One uniform permutation yields one marginal sample per player; the
    estimators for sh, hsh, help and cen-sh are unbiased permutation
    averages, and hc combines the sh and cen-sh samples of the same
    permutation stream.
    """
    if measure not in SAMPLED_MEASURES:
        raise ValueError(f"measure {measure!r} is not samplable; one of {SAMPLED_MEASURES}")
    if measure != "sh" and graph is None:
        raise ValueError(f"measure {measure!r} needs a graph")
    if graph is not None:
        check_same_size(game, graph)

    delta_value: Fraction | None = None
    if measure == "hc":
        if delta is None:
            raise ValueError("hc sampling needs a delta-star value")
        delta_value = delta.value if isinstance(delta, DeltaStar) else Fraction(delta)
        if delta_value <= 0:
            raise ValueError(f"delta-star must be positive, got {delta_value}")
    dfloat = float(delta_value) if delta_value is not None else 1.0

    n = game.n
    use_table = n <= ENUM_MAX_PLAYERS
    vt = vtc = None
    closed = None
    if use_table:
        vt = CSGValue(game).table().as_floats()
        if measure in ("cen-sh", "hc"):
            vtc = CentralityExtension(CSGValue(game), graph).table().as_floats()
        closed = np.array(
            graph.closed_masks if graph is not None else [1 << i for i in range(n)],
            dtype=np.int64)

    sizes = _block_sizes(cfg.samples)

    def run_block(block: int):
        rng = _block_rng(cfg.seed, block)
        perms = _permutations(rng, sizes[block], n)
        if use_table:
            return _table_block_stats(perms, n, measure, vt, vtc, closed, dfloat)
        return _sweep_block_stats(perms, game, graph, measure, dfloat)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(run_block, range(len(sizes))))
    else:
        results = [run_block(b) for b in range(len(sizes))]

    total = np.zeros(n)
    total_sq = np.zeros(n)
    for sums, sqs in results:  # fixed block order: deterministic reduction
        total += sums
        total_sq += sqs

    m = cfg.samples
    mean = total / m
    var = np.maximum(total_sq - total * total / m, 0.0) / (m - 1)
    stderr = np.sqrt(var / m)
    return CentralityVector(
        tuple(float(x) for x in mean),
        measure=measure, method="sample",
        stderr=tuple(float(s) for s in stderr),
        samples=m, seed=cfg.seed,
        delta_star=delta_value,
    )
