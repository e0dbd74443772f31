# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from strata_betti.algebra import AlgebraSpec
from strata_betti.exceptions import InsufficientTruncationError, WindowTooSmallError


@dataclass(frozen=True)
class PoincareSeries:
    """A Betti generating function truncated after ``max_degree``."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            msg = "A series needs at least the constant coefficient."
            raise ValueError(msg)
        for coefficient in self.coefficients:
            if coefficient < 0:
                msg = f"Coefficients must be nonnegative, got {coefficient}."
                raise ValueError(msg)

    @classmethod
    def from_array(cls, array: Iterable[int]) -> PoincareSeries:
        return cls(tuple(int(value) for value in array))

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> int:
        if degree > self.max_degree:
            raise InsufficientTruncationError(self.max_degree, degree)
        if degree < 0:
            return 0
        return self.coefficients[degree]

    def to_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=np.int64)

    def truncate(self, max_degree: int) -> PoincareSeries:
        """Return the series truncated at a lower degree."""
        if max_degree > self.max_degree:
            raise InsufficientTruncationError(self.max_degree, max_degree)
        return PoincareSeries(self.coefficients[: max_degree + 1])

    def table(self) -> list[tuple[int, int]]:
        """Return (degree, coefficient) rows."""
        return list(enumerate(self.coefficients))


def _geometric(step: int, max_degree: int) -> np.ndarray:
    array = np.zeros(max_degree + 1, dtype=np.int64)
    array[::step] = 1
    return array


def _exterior(degree: int, max_degree: int) -> np.ndarray:
    array = np.zeros(max_degree + 1, dtype=np.int64)
    array[0] = 1
    if degree <= max_degree:
        array[degree] = 1
    return array


def free_cga_series(algebra: AlgebraSpec, max_degree: int) -> PoincareSeries:
    """Return the Poincare series of a free graded-commutative algebra.

    Even generators contribute 1/(1 - t^deg), odd generators (1 + t^deg).
    """
    if max_degree < 0:
        msg = f"max_degree must be >= 0, got {max_degree}."
        raise ValueError(msg)
    result = np.zeros(max_degree + 1, dtype=np.int64)
    result[0] = 1
    for generator in algebra.generators:
        factor = (
            _exterior(generator.degree, max_degree)
            if generator.is_odd
            else _geometric(generator.degree, max_degree)
        )
        result = np.convolve(result, factor)[: max_degree + 1]
    return PoincareSeries.from_array(result)


def series_product(a: PoincareSeries, b: PoincareSeries, max_degree: int) -> PoincareSeries:
    """Return the Cauchy product of two series truncated at max_degree.

    Raises
    ------
    InsufficientTruncationError
        If one of the factors is truncated below max_degree.
    """
    available = min(a.max_degree, b.max_degree)
    if available < max_degree:
        raise InsufficientTruncationError(available, max_degree)
    product = np.convolve(a.to_array(), b.to_array())[: max_degree + 1]
    return PoincareSeries.from_array(product)


def periodicity_check(series: PoincareSeries, onset: int, period: int) -> bool:
    """Return True if c(i) = c(i + period) for every onset <= i <= max_degree - period.

    Raises
    ------
    WindowTooSmallError
        If onset + 2 * period exceeds the truncation.
    """
    if period < 1:
        msg = f"period must be >= 1, got {period}."
        raise ValueError(msg)
    if onset + 2 * period > series.max_degree:
        raise WindowTooSmallError(onset, period, series.max_degree)
    coefficients = series.to_array()
    return bool(np.array_equal(coefficients[onset:-period], coefficients[onset + period :]))
