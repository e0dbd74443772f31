# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgebraSpec, Monomial


@lru_cache(maxsize=4096)
def _degree_basis(algebra: AlgebraSpec, n: int) -> tuple[Monomial, ...]:
    degrees = algebra.degrees
    exponents = [0] * len(degrees)
    found: list[Monomial] = []

    def _fill(position: int, remaining: int) -> None:
        if position == len(degrees):
            if remaining == 0:
                monomial = algebra.monomial(exponents)
                if monomial is not None:
                    found.append(monomial)
            return
        degree = degrees[position]
        largest = remaining // degree
        if algebra.generators[position].is_odd:
            largest = min(largest, 1)
        for exponent in range(largest, -1, -1):
            exponents[position] = exponent
            _fill(position + 1, remaining - exponent * degree)
        exponents[position] = 0

    _fill(0, n)
    return tuple(found)


def degree_basis(algebra: AlgebraSpec, n: int) -> list[Monomial]:
    """List all monomials of total degree n.

    The order is lexicographically descending on exponent vectors, so for the algebra
    on b2, v5, v7 the degree 7 basis is [b2*v5, v7]. Degree 0 gives exactly [1].

    Parameters
    ----------
    algebra : AlgebraSpec
        The free graded-commutative algebra.
    n : int
        Total degree, must be >= 0.

    Returns
    -------
    list[Monomial]
        The basis of the degree n piece.
    """
    if n < 0:
        msg = f"Degrees are nonnegative, got {n}."
        raise ValueError(msg)
    return list(_degree_basis(algebra, n))
