# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Closed forms for the stable homology of w_{1^j 2}(C^d) and of w_{1^j 2 3}(C^d).

The predicted table puts Q^2 in degrees 2(2k-1)d-1 and 4kd; the corrected one puts Q^2 in
every degree k(2d-1). Both put Q in degree 0. The two odd-degree families never share a
degree with the even one, so no degree gets two contributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ClosedFormRule(Enum):
    """Which closed form to evaluate."""

    VW_PREDICTED = "vw_predicted"
    CORRECTED = "corrected"


def _check(d: int, i: int) -> None:
    if d < 1:
        msg = f"d must be >= 1, got {d}."
        raise ValueError(msg)
    if i < 0:
        msg = f"Degrees are nonnegative, got {i}."
        raise ValueError(msg)


def formula_vw(d: int, i: int) -> int:
    """Return the predicted dimension of H_i, nonzero at i = 2(2k-1)d-1 and i = 4kd."""
    _check(d, i)
    if i == 0:
        return 1
    if i % 2 == 1:
        quotient, remainder = divmod(i + 1, 2 * d)
        return 2 if remainder == 0 and quotient % 2 == 1 else 0
    return 2 if i % (4 * d) == 0 else 0


def formula_corrected(d: int, i: int) -> int:
    """Return the dimension of H_i, which is 2 at every positive multiple of 2d-1."""
    _check(d, i)
    if i == 0:
        return 1
    return 2 if i % (2 * d - 1) == 0 else 0


@dataclass(frozen=True)
class ClosedFormTable:
    """One of the closed forms evaluated for a fixed d."""

    d: int
    rule: ClosedFormRule
    max_degree: int

    def __post_init__(self) -> None:
        _check(self.d, self.max_degree)

    def value(self, i: int) -> int:
        if self.rule is ClosedFormRule.VW_PREDICTED:
            return formula_vw(self.d, i)
        return formula_corrected(self.d, i)

    def rows(self) -> list[tuple[int, int]]:
        return [(i, self.value(i)) for i in range(self.max_degree + 1)]


def first_disagreement(d: int) -> int:
    """Return the smallest degree where the predicted and corrected tables differ.

    The scan always stops, at 4d-2 at the latest: the corrected table is 2 there and the
    predicted one is 0 because 4d-2 is even but not a multiple of 4d.
    """
    _check(d, 0)
    i = 0
    while formula_vw(d, i) == formula_corrected(d, i):
        i += 1
    return i


def published_w1j23(d: int, i: int) -> int:
    """Return the published table of w_{1^j 2 3}: 4k at i = k(2d-1) for k > 1, 0 otherwise."""
    _check(d, i)
    if i == 0:
        return 1
    k, remainder = divmod(i, 2 * d - 1)
    return 4 * k if remainder == 0 and k > 1 else 0


@dataclass(frozen=True)
class FormulaComparison:
    """Side-by-side values of the two closed forms."""

    d: int
    rows: tuple[tuple[int, int, int], ...]
    first_disagreement: int

    @property
    def disagreeing_degrees(self) -> list[int]:
        return [degree for degree, predicted, corrected in self.rows if predicted != corrected]


def compare_formulas(d: int, max_degree: int) -> FormulaComparison:
    """Tabulate (degree, predicted, corrected) for degrees 0..max_degree."""
    predicted = ClosedFormTable(d, ClosedFormRule.VW_PREDICTED, max_degree).rows()
    corrected = ClosedFormTable(d, ClosedFormRule.CORRECTED, max_degree).rows()
    rows = tuple(
        (i, vw, value) for (i, vw), (_, value) in zip(predicted, corrected, strict=True)
    )
    return FormulaComparison(d=d, rows=rows, first_disagreement=first_disagreement(d))
