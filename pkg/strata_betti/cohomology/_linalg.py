# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Exact sparse Gaussian elimination over the rationals.

Vectors are dicts from an ordered coordinate key to a nonzero Fraction. Pivots are always the
first nonzero coordinate in key order, so results only depend on the basis order.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

SparseVector = dict[Any, Fraction]


def add_scaled(target: SparseVector, source: Mapping[Any, Fraction], scale: Fraction) -> None:
    """Add ``scale * source`` to ``target`` in place, dropping cancelled coordinates."""
    if scale == 0:
        return
    for key, value in source.items():
        updated = target.get(key, Fraction(0)) + scale * value
        if updated == 0:
            target.pop(key, None)
        else:
            target[key] = updated


def scaled(vector: Mapping[Any, Fraction], scale: Fraction) -> SparseVector:
    """Return ``scale * vector``."""
    if scale == 0:
        return {}
    return {key: scale * value for key, value in vector.items()}


def leading_key(vector: Mapping[Any, Fraction]) -> Any:  # noqa: ANN401
    """Return the first nonzero coordinate."""
    return min(vector)


@dataclass
class _Row:
    vector: SparseVector
    combination: SparseVector


class _EchelonBasis:
    """Incrementally built echelon basis of a span of inserted vectors.

    Every row remembers how it is combined from the inserted vectors (by their tags), which
    yields kernels of the insertion map and solutions of linear systems.
    """

    def __init__(self) -> None:
        self._rows: dict[Any, _Row] = {}
        self._kernel: list[SparseVector] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[Any]:
        return sorted(self._rows)

    @property
    def kernel(self) -> list[SparseVector]:
        """Relations between the inserted vectors, as tag combinations."""
        return list(self._kernel)

    def rows(self) -> list[SparseVector]:
        return [dict(self._rows[pivot].vector) for pivot in self.pivots]

    def reduce(self, vector: Mapping[Any, Fraction]) -> tuple[SparseVector, SparseVector]:
        """Reduce a vector against all rows.

        Returns
        -------
        tuple[SparseVector, SparseVector]
            The residue, which is zero on every pivot coordinate, and the tag combination
            ``c`` with ``vector = residue + sum(c[tag] * inserted[tag])``.
        """
        residue = dict(vector)
        combination: SparseVector = {}
        for pivot in self.pivots:
            coefficient = residue.get(pivot)
            if coefficient is None:
                continue
            row = self._rows[pivot]
            add_scaled(residue, row.vector, -coefficient)
            add_scaled(combination, row.combination, coefficient)
        return residue, combination

    def insert(self, vector: Mapping[Any, Fraction], tag: Hashable) -> bool:
        """Insert a tagged vector; return True if it enlarged the span."""
        residue, combination = self.reduce(vector)
        own = {tag: Fraction(1)}
        add_scaled(own, combination, Fraction(-1))
        if not residue:
            self._kernel.append(own)
            return False
        pivot = leading_key(residue)
        inverse = 1 / residue[pivot]
        self._rows[pivot] = _Row(scaled(residue, inverse), scaled(own, inverse))
        return True

    def contains(self, vector: Mapping[Any, Fraction]) -> bool:
        residue, _ = self.reduce(vector)
        return not residue

    def solve(self, vector: Mapping[Any, Fraction]) -> SparseVector | None:
        """Express a vector through the inserted ones, or return None if it is not in the span.

        Tags of inserted vectors that were linearly dependent get coefficient 0.
        """
        residue, combination = self.reduce(vector)
        if residue:
            return None
        return combination


def reduced_row_echelon(vectors: Iterable[Mapping[Any, Fraction]]) -> list[SparseVector]:
    """Return the reduced row echelon basis of the span, sorted by pivot."""
    basis = _EchelonBasis()
    for position, vector in enumerate(vectors):
        basis.insert(vector, position)
    rows = {leading_key(row): row for row in basis.rows()}
    for pivot in sorted(rows, reverse=True):
        for other in rows:
            if other < pivot and pivot in rows[other]:
                add_scaled(rows[other], rows[pivot], -rows[other][pivot])
    return [rows[pivot] for pivot in sorted(rows)]
