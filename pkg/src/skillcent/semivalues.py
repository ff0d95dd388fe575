"""Semivalue weight families.

A semivalue is determined by weights beta(0..n-1) summing to one: the
index of player i is the beta-weighted average over coalition sizes k of
the mean marginal contribution of i to size-k coalitions drawn from the
other players.  Shapley (beta = 1/n), Banzhaf and the trivial semivalue
are built in; custom tables are loaded from exact-fraction files.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path

from .errors import ValidationError

__all__ = ["SemivalueSpec", "load_custom_semivalue"]

KINDS = ("shapley", "banzhaf", "trivial", "custom")


@dataclass(frozen=True)
class SemivalueSpec:
    """Weight family identifier; ``table`` is set only for custom families."""

    kind: str
    table: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown semivalue kind {self.kind!r}")
        if (self.kind == "custom") != (self.table is not None):
            raise ValidationError("custom semivalues need a weight table; built-ins must not have one")
        if self.table is not None:
            if any(w < 0 for w in self.table):
                raise ValidationError("semivalue weights must be non-negative")
            if sum(self.table, Fraction(0)) != 1:
                raise ValidationError(
                    f"semivalue weights must sum to 1 exactly, got {sum(self.table, Fraction(0))}")

    @classmethod
    def shapley(cls) -> "SemivalueSpec":
        return cls("shapley")

    @classmethod
    def banzhaf(cls) -> "SemivalueSpec":
        return cls("banzhaf")

    @classmethod
    def trivial(cls) -> "SemivalueSpec":
        return cls("trivial")

    @classmethod
    def custom(cls, weights) -> "SemivalueSpec":
        return cls("custom", tuple(Fraction(w) for w in weights))

    def weight(self, n: int, k: int) -> Fraction:
        """beta(k) for an n-player game; k is the coalition size, 0..n-1."""
        if not 0 <= k <= n - 1:
            raise ValueError(f"coalition size {k} out of range 0..{n - 1}")
        if self.kind == "shapley":
            return Fraction(1, n)
        if self.kind == "banzhaf":
            return Fraction(comb(n - 1, k), 2 ** (n - 1))
        if self.kind == "trivial":
            return Fraction(1) if k == 0 else Fraction(0)
        assert self.table is not None
        if len(self.table) != n:
            raise ValidationError(
                f"custom semivalue has {len(self.table)} weights but the game has {n} players")
        return self.table[k]

    def weights(self, n: int) -> list[Fraction]:
        return [self.weight(n, k) for k in range(n)]

    @property
    def measure_tag(self) -> str:
        return {"shapley": "sh", "banzhaf": "banzhaf",
                "trivial": "trivial", "custom": "semivalue"}[self.kind]


def load_custom_semivalue(path: str | Path) -> SemivalueSpec:
    """Parse a custom weight file: one ``k num/den`` line per coalition size."""
    entries: dict[int, Fraction] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValidationError(f"{path}:{lineno}: expected 'k num/den', got {raw!r}")
        try:
            k = int(parts[0])
            w = Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"{path}:{lineno}: {exc}") from exc
        if k in entries:
            raise ValidationError(f"{path}:{lineno}: duplicate weight for k={k}")
        entries[k] = w
    if sorted(entries) != list(range(len(entries))):
        raise ValidationError(f"{path}: weights must cover k = 0..n-1 without gaps")
    return SemivalueSpec.custom([entries[k] for k in range(len(entries))])
