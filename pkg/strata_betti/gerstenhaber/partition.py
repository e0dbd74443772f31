# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    """A multiset of positive parts, stored in increasing order.

    In the free Gerstenhaber algebra the stratum w_lambda corresponds to the multidegree in
    which generator x_k occurs m_k times, m_k being the number of parts equal to k.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for part in self.parts:
            if part < 1:
                msg = f"Parts must be >= 1, got {part}."
                raise ValueError(msg)
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Iterable[int]) -> Partition:
        """Build a partition from (m_1, m_2, ...)."""
        parts: list[int] = []
        for part, multiplicity in enumerate(multiplicities, start=1):
            if multiplicity < 0:
                msg = f"Multiplicities must be >= 0, got {multiplicity}."
                raise ValueError(msg)
            parts.extend([part] * multiplicity)
        return cls(tuple(parts))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """(m_1, ..., m_n) with n the largest part; empty for the empty partition."""
        counts = Counter(self.parts)
        return tuple(counts.get(part, 0) for part in range(1, self.largest_part + 1))

    @property
    def largest_part(self) -> int:
        return self.parts[-1] if self.parts else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def with_ones(self, j: int) -> Partition:
        """Return 1^j lambda, the partition with j additional parts equal to 1."""
        if j < 0:
            msg = f"j must be >= 0, got {j}."
            raise ValueError(msg)
        return Partition(self.parts + (1,) * j)

    def without_ones(self) -> Partition:
        """Return the partition with every part equal to 1 removed."""
        return Partition(tuple(part for part in self.parts if part != 1))

    def render(self) -> str:
        """Return the canonical text form, e.g. ``1^3 2``."""
        tokens = []
        for part, multiplicity in enumerate(self.multiplicities, start=1):
            if multiplicity == 1:
                tokens.append(str(part))
            elif multiplicity > 1:
                tokens.append(f"{part}^{multiplicity}")
        return " ".join(tokens)

    def __str__(self) -> str:
        return self.render()
