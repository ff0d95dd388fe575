"""Multisets of skills.

A skill multiset maps opaque skill identifiers to positive integer
multiplicities; absent means multiplicity zero.  Task requirements, player
endowments and pooled coalition skills are all values of this type.
Containment here is the non-strict product order on multiplicities (``a``
is contained in ``b`` iff every multiplicity of ``a`` is <= the matching
multiplicity of ``b``), which is exactly the task-completion test.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .errors import ValidationError

__all__ = ["SkillMultiset"]


class SkillMultiset:
    """Immutable multiset over hashable skill identifiers.

    Canonical form: entries with multiplicity 0 are never stored, so two
    equal multisets always compare equal.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[str, int] | None = None):
        clean: dict[str, int] = {}
        for skill, mult in (counts or {}).items():
            if not isinstance(mult, int):
                raise ValidationError(f"multiplicity of {skill!r} must be an integer, got {mult!r}")
            if mult < 0:
                raise ValidationError(f"multiplicity of {skill!r} is negative: {mult}")
            if mult > 0:
                clean[skill] = mult
        self._counts = clean

    @property
    def counts(self) -> dict[str, int]:
        return dict(self._counts)

    def multiplicity(self, skill: str) -> int:
        return self._counts.get(skill, 0)

    def total(self) -> int:
        """Total size: sum of all multiplicities."""
        return sum(self._counts.values())

    def support(self) -> frozenset[str]:
        return frozenset(self._counts)

    def issubmultiset(self, other: "SkillMultiset") -> bool:
        """True iff every multiplicity in self is covered by ``other``."""
        other_counts = other._counts
        return all(other_counts.get(s, 0) >= m for s, m in self._counts.items())

    def __add__(self, other: "SkillMultiset") -> "SkillMultiset":
        """Multiset sum: per-skill multiplicities add (commutative, associative)."""
        if not isinstance(other, SkillMultiset):
            return NotImplemented
        merged = dict(self._counts)
        for s, m in other._counts.items():
            merged[s] = merged.get(s, 0) + m
        return SkillMultiset(merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkillMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self) -> Iterator[str]:
        return iter(self._counts)

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __repr__(self) -> str:
        inner = ", ".join(f"{s}:{m}" for s, m in sorted(self._counts.items()))
        return f"SkillMultiset({{{inner}}})"
