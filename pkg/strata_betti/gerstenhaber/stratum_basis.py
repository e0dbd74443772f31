# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass

from .basic_products import BasicProduct, basic_products
from .partition import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StratumMonomial:
    """A commutative monomial in basic products, i.e. a basis class of H_*(w_lambda)."""

    factors: tuple[tuple[BasicProduct, int], ...]

    def __post_init__(self) -> None:
        for product, exponent in self.factors:
            if exponent < 1:
                msg = f"Exponent of {product} must be >= 1, got {exponent}."
                raise ValueError(msg)
            if product.parity == 1 and exponent > 1:
                msg = f"The odd class {product} can not occur with exponent {exponent}."
                raise ValueError(msg)

    @property
    def multidegree(self) -> tuple[int, ...]:
        if not self.factors:
            return ()
        total = [0] * self.factors[0][0].n
        for product, exponent in self.factors:
            for letter, count in enumerate(product.multidegree):
                total[letter] += exponent * count
        return tuple(total)

    @property
    def degree(self) -> int:
        return sum(product.degree * exponent for product, exponent in self.factors)

    def render(self) -> str:
        parts = []
        for product, exponent in self.factors:
            text = product.render()
            parts.append(text if exponent == 1 else f"{text}^{exponent}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


def stratum_basis(partition: Partition, d: int, max_degree: int) -> list[StratumMonomial]:
    """Enumerate the basis of H_*(w_lambda(C^d); Q) up to a degree.

    The basis consists of all monomials in basic products whose multidegree is exactly the
    multiplicity vector of the partition.

    Parameters
    ----------
    partition : Partition
        The nonempty partition lambda.
    d : int
        Complex dimension of the ambient space, >= 1.
    max_degree : int
        Highest homological degree to enumerate.

    Returns
    -------
    list[StratumMonomial]
        Sorted by degree, then by exponent vector (lexicographically descending) over the
        sorted basic products.
    """
    if not partition.parts:
        msg = "The partition must not be empty."
        raise ValueError(msg)
    if d < 1:
        msg = f"d must be >= 1, got {d}."
        raise ValueError(msg)

    if max_degree < 0:
        return []

    target = partition.multiplicities
    n = len(target)
    # a bracket with k leaves costs k-1 degree units
    budget = max_degree // (2 * d - 1)

    products = basic_products(n, d, target, max_leaves=budget + 1)
    letters = [product for product in products if product.is_letter]
    brackets = [product for product in products if not product.is_letter]
    order = {product: position for position, product in enumerate(products)}

    found: list[StratumMonomial] = []
    remaining = list(target)
    chosen: list[tuple[BasicProduct, int]] = []

    def _choose(position: int, budget_left: int) -> None:
        if position == len(brackets):
            factors = list(chosen)
            for letter in letters:
                count = remaining[letter.word[0] - 1]
                if count:
                    factors.append((letter, count))
            found.append(StratumMonomial(tuple(sorted(factors, key=lambda f: order[f[0]]))))
            return
        product = brackets[position]
        multidegree = product.multidegree
        cost = product.leaves - 1
        largest = budget_left // cost
        for letter, count in enumerate(multidegree):
            if count:
                largest = min(largest, remaining[letter] // count)
        if product.parity == 1:
            largest = min(largest, 1)
        for exponent in range(largest, -1, -1):
            if exponent:
                for letter, count in enumerate(multidegree):
                    remaining[letter] -= exponent * count
                chosen.append((product, exponent))
            _choose(position + 1, budget_left - exponent * cost)
            if exponent:
                chosen.pop()
                for letter, count in enumerate(multidegree):
                    remaining[letter] += exponent * count

    _choose(0, budget)
    logger.debug("lambda=%s d=%d: %d basis classes", partition, d, len(found))

    def _key(monomial: StratumMonomial) -> tuple[int, tuple[int, ...]]:
        exponents = [0] * len(products)
        for product, exponent in monomial.factors:
            exponents[order[product]] = exponent
        return monomial.degree, tuple(-e for e in exponents)

    return sorted(found, key=_key)


def stratum_betti_table(
    partition: Partition, d: int, max_degree: int
) -> list[tuple[int, int]]:
    """Return (degree, dim) of H_*(w_lambda(C^d); Q) for degrees 0..max_degree."""
    counts = Counter(monomial.degree for monomial in stratum_basis(partition, d, max_degree))
    return [(degree, counts.get(degree, 0)) for degree in range(max_degree + 1)]


def stable_stratum_betti(
    tail: Partition, d: int, max_degree: int, j: int | None = None
) -> list[tuple[int, int]]:
    """Return the stable table of w_{1^j tail} as j grows.

    By default the table is computed at j = max_degree + 2. A basic product with k leaves and
    a letter other than 1 uses at most k-1 ones, and only [x1,x1] uses more, so no monomial
    of degree <= max_degree runs out of ones at this j. A smaller j is only stable where a
    stable range rule says so; ``strata.stable_j`` checks that.
    """
    if j is None:
        j = max_degree + 2
    return stratum_betti_table(tail.with_ones(j), d, max_degree)
