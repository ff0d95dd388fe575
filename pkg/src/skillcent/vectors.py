"""Per-player result vectors and their reporting helpers."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

__all__ = ["CentralityVector", "grouped_ordering", "format_grouped"]

Value = Fraction | float


@dataclass(frozen=True)
class CentralityVector:
    """Values of one centrality measure, with solver metadata.

    Exact solvers store Fractions; the sampling solver stores floats plus
    per-player standard errors and the sample count.  The ``normalized``
    flag is only ever set when the raw component sum was nonzero.
    """

    values: tuple[Value, ...]
    measure: str
    method: str
    normalized: bool = False
    stderr: tuple[float, ...] | None = None
    samples: int | None = None
    delta_star: Value | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.stderr is not None and len(self.stderr) != len(self.values):
            raise ValueError("stderr length must match values length")

    @property
    def n(self) -> int:
        return len(self.values)

    def total(self) -> Value:
        return sum(self.values)

    def as_floats(self) -> list[float]:
        return [float(v) for v in self.values]

    def __getitem__(self, i: int) -> Value:
        return self.values[i]

    def normalize(self) -> "CentralityVector":
        """Divide by the component sum; refused (with a warning) when it is zero."""
        total = self.total()
        if total == 0:
            warnings.warn(
                f"cannot normalize {self.measure}: component sum is zero", stacklevel=2)
            return self
        if isinstance(total, Fraction):
            values = tuple(v / total for v in self.values)
        else:
            values = tuple(float(v) / float(total) for v in self.values)
        stderr = None
        if self.stderr is not None:
            stderr = tuple(s / abs(float(total)) for s in self.stderr)
        return replace(self, values=values, stderr=stderr, normalized=True)


def grouped_ordering(values: Sequence[Value]) -> list[list[int]]:
    """Player indices sorted by decreasing value, ties grouped together.

    Comparison is exact for Fractions; within a group indices ascend.
    """
    order = sorted(range(len(values)), key=lambda i: (values[i], -i), reverse=True)
    groups: list[list[int]] = []
    for i in order:
        if groups and values[groups[-1][0]] == values[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    for g in groups:
        g.sort()
    return groups


def format_grouped(values: Sequence[Value], labels: Sequence[str] | None = None) -> str:
    """Render the descending tie-grouped ordering, e.g. ``16> 13> {7,9,12}``."""
    if labels is None:
        labels = [str(i + 1) for i in range(len(values))]
    parts = []
    for group in grouped_ordering(values):
        if len(group) == 1:
            parts.append(labels[group[0]])
        else:
            parts.append("{" + ",".join(labels[i] for i in group) + "}")
    return "> ".join(parts)
