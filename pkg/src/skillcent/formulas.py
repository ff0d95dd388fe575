"""Closed-form solvers.

Two families: formulas over the veto-basis decomposition (Shapley, helping
Shapley and Help from the dividends a_S), and per-task closed forms for
pure skill games (every task needs a single copy of a single skill).

The helping formulas use the difference form
``1/(|NC|+1) - 1/(|S|+1)`` for helpers outside S: the probability that all
of S outside the helper's closed neighborhood precede it, minus the
probability that all of S does.  The product form sometimes quoted for
this case double-counts the dependence between the two events and fails
the enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charfn import harsanyi_dividends, reconstruct_from_dividends, _as_charfn
from .errors import ValidationError
from .exact import DeltaStar
from .game import SkillGame, check_same_size
from .graph import Graph, mask_members
from .vectors import CentralityVector

__all__ = [
    "VetoDecomposition", "nc_mask", "cov_mask", "veto_shapley", "veto_hsh",
    "veto_help", "pure_skill_check", "PureSkillMeasures", "pure_skill_measures",
]


@dataclass(frozen=True)
class VetoDecomposition:
    """Sparse Harsanyi dividends: only nonzero coalitions are stored."""

    n: int
    dividends: dict[int, Fraction]

    @classmethod
    def of(cls, v, n: int | None = None) -> "VetoDecomposition":
        fn = _as_charfn(v)
        return cls(fn.n, harsanyi_dividends(fn, n))

    def reconstruct(self, coalition) -> Fraction:
        return reconstruct_from_dividends(self.dividends, self.n, coalition)

    def verify(self, v) -> bool:
        """Exact reconstruction check against the source function, all coalitions."""
        fn = _as_charfn(v)
        return all(self.reconstruct(m) == fn.value(m) for m in range(1 << self.n))


def nc_mask(graph: Graph, i: int, s_mask: int) -> int:
    """Members of S not covered by i: S minus i's closed neighborhood."""
    return s_mask & ~graph.closed_masks[i]


def cov_mask(graph: Graph, i: int, s_mask: int) -> int:
    """Members of S inside i's closed neighborhood."""
    return s_mask & graph.closed_masks[i]


def veto_shapley(d: VetoDecomposition, n: int | None = None) -> CentralityVector:
    """Sh(i) = Σ_{S∋i} a_S / |S| over the stored dividends."""
    n = d.n if n is None else n
    values = [Fraction(0)] * n
    for s_mask, a in sorted(d.dividends.items()):
        size = s_mask.bit_count()
        share = a / size
        for i in mask_members(s_mask):
            values[i] += share
    return CentralityVector(tuple(values), measure="sh", method="veto")


def _neighborhood_of(graph: Graph, s_mask: int) -> int:
    out = 0
    for i in mask_members(s_mask):
        out |= graph.neighbor_masks[i]
    return out


def veto_hsh(d: VetoDecomposition, graph: Graph) -> CentralityVector:
    """Helping Shapley value from dividends.

    Members of S are pivotal once everything they do not cover has arrived:
    a_S/(|NC|+1).  Outside helpers i ∈ N(S)\\S contribute
    a_S·[1/(|NC|+1) − 1/(|S|+1)]; players with i ∉ S ∪ N(S) contribute 0.
    """
    if graph.n != d.n:
        raise ValidationError(f"graph has {graph.n} vertices, decomposition has {d.n}")
    values = [Fraction(0)] * d.n
    for s_mask, a in sorted(d.dividends.items()):
        size = s_mask.bit_count()
        for i in mask_members(s_mask):
            values[i] += a / (nc_mask(graph, i, s_mask).bit_count() + 1)
        helpers = _neighborhood_of(graph, s_mask) & ~s_mask
        for i in mask_members(helpers):
            nc = nc_mask(graph, i, s_mask).bit_count()
            values[i] += a * (Fraction(1, nc + 1) - Fraction(1, size + 1))
    return CentralityVector(tuple(values), measure="hsh", method="veto")


def veto_help(d: VetoDecomposition, graph: Graph) -> CentralityVector:
    """Help from dividends; equals veto_hsh − veto_shapley componentwise."""
    if graph.n != d.n:
        raise ValidationError(f"graph has {graph.n} vertices, decomposition has {d.n}")
    values = [Fraction(0)] * d.n
    for s_mask, a in sorted(d.dividends.items()):
        size = s_mask.bit_count()
        for i in mask_members(s_mask):
            nc = nc_mask(graph, i, s_mask).bit_count()
            cov = cov_mask(graph, i, s_mask).bit_count()
            values[i] += a * Fraction(cov - 1, size * (nc + 1))
        helpers = _neighborhood_of(graph, s_mask) & ~s_mask
        for i in mask_members(helpers):
            nc = nc_mask(graph, i, s_mask).bit_count()
            values[i] += a * (Fraction(1, nc + 1) - Fraction(1, size + 1))
    return CentralityVector(tuple(values), measure="help", method="veto")


def pure_skill_check(game: SkillGame) -> bool:
    """True iff every task requires exactly one copy of one skill."""
    return all(task.size() == 1 for task in game.tasks)


@dataclass(frozen=True)
class PureSkillMeasures:
    sh: CentralityVector
    cen_sh: CentralityVector
    hsh: CentralityVector
    help: CentralityVector
    hc: CentralityVector


def pure_skill_measures(game: SkillGame, graph: Graph,
                        delta: DeltaStar | int | float | Fraction) -> PureSkillMeasures:
    """All five measures of a pure skill game from per-task pivot probabilities.

    With P(t) the holders of task t's unique skill: a holder is pivotal for
    v when first among P(t); anyone in P(t) ∪ N(P(t)) is pivotal for v_cen
    when first in that set; a non-holder neighbor is pivotal for HSh when
    first among itself plus P(t).  Unachievable tasks (P(t) empty)
    contribute nothing anywhere.
    """
    check_same_size(game, graph)
    if not pure_skill_check(game):
        raise ValidationError("not a pure skill game: some task needs more than one skill copy")
    d = delta.value if isinstance(delta, DeltaStar) else Fraction(delta)
    if d <= 0:
        raise ValueError(f"delta-star must be positive, got {d}")

    n = game.n
    sh = [Fraction(0)] * n
    cen = [Fraction(0)] * n
    hsh = [Fraction(0)] * n
    help_ = [Fraction(0)] * n

    for task in game.tasks:
        s = next(i for i, c in enumerate(task.counts) if c)
        p_mask = game.holder_masks[s]
        p_size = p_mask.bit_count()
        if p_size == 0:
            continue
        pn_mask = p_mask | _neighborhood_of(graph, p_mask)
        pn_size = pn_mask.bit_count()
        w = task.profit
        for i in mask_members(pn_mask):
            cen[i] += w / pn_size
            if p_mask >> i & 1:
                sh[i] += w / p_size
                hsh[i] += w / p_size
            else:
                hsh[i] += w / (p_size + 1)
                help_[i] += w / (p_size + 1)

    hc = [(1 + 1 / d) * c - s_ / d for s_, c in zip(sh, cen)]

    def vec(vals, measure, **kw):
        return CentralityVector(tuple(vals), measure=measure, method="pure", **kw)

    return PureSkillMeasures(
        sh=vec(sh, "sh"),
        cen_sh=vec(cen, "cen-sh"),
        hsh=vec(hsh, "hsh"),
        help=vec(help_, "help"),
        hc=vec(hc, "hc", delta_star=d),
    )
