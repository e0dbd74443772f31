# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Basis of the free shifted Lie algebra inside the free (2d)-Gerstenhaber algebra.

Generators x_1..x_n sit in degree 0 and the bracket has degree 2d-1. Suspending every
generator to the odd degree 2d-1 turns the bracket into an ordinary graded Lie bracket, whose
basis over Q is given by Lyndon words together with the squares [w,w] of the Lyndon words of
odd suspended degree, i.e. of odd length. A bracket with k leaves has degree (k-1)(2d-1).
Only the degree unit 2d-1 depends on d, which is why the Betti tables are periodic in 2d-1.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .lyndon import Word, lyndon_words, standard_bracketing


@dataclass(frozen=True)
class BasicProduct:
    """A basis element of the free shifted Lie algebra: a Lyndon word or its square."""

    word: Word
    square: bool
    n: int
    d: int

    def __post_init__(self) -> None:
        if self.square and len(self.word) % 2 == 0:
            msg = f"Only odd length words have a nonzero square, got {self.word}."
            raise ValueError(msg)

    @property
    def leaves(self) -> int:
        return 2 * len(self.word) if self.square else len(self.word)

    @property
    def multidegree(self) -> tuple[int, ...]:
        factor = 2 if self.square else 1
        return tuple(factor * self.word.count(letter) for letter in range(1, self.n + 1))

    @property
    def degree(self) -> int:
        return (self.leaves - 1) * (2 * self.d - 1)

    @property
    def parity(self) -> int:
        return self.degree % 2

    @property
    def is_letter(self) -> bool:
        return not self.square and len(self.word) == 1

    def sort_key(self) -> tuple[int, int, Word]:
        return self.degree, self.leaves, self.word

    def render(self) -> str:
        bracket = standard_bracketing(self.word)
        return f"[{bracket},{bracket}]" if self.square else bracket

    def __str__(self) -> str:
        return self.render()


def basic_products(
    n: int,
    d: int,
    multidegree_cap: Sequence[int],
    max_leaves: int | None = None,
) -> list[BasicProduct]:
    """List the basic products whose multidegree fits under a cap.

    Parameters
    ----------
    n : int
        Number of generators, >= 1.
    d : int
        Half the real dimension of the ambient space, >= 1.
    multidegree_cap : Sequence[int]
        Maximal number of occurrences of each generator.
    max_leaves : int | None, optional
        Maximal number of leaves, by default the total of the cap.

    Returns
    -------
    list[BasicProduct]
        Sorted by degree, leaves and word.
    """
    if d < 1:
        msg = f"d must be >= 1, got {d}."
        raise ValueError(msg)
    cap = list(multidegree_cap) + [0] * (n - len(multidegree_cap))
    if max_leaves is None:
        max_leaves = sum(cap)

    products = []
    for word in lyndon_words(n, max_leaves, cap):
        products.append(BasicProduct(word, square=False, n=n, d=d))
        if len(word) % 2 == 1 and 2 * len(word) <= max_leaves:
            square = BasicProduct(word, square=True, n=n, d=d)
            if all(count <= bound for count, bound in zip(square.multidegree, cap, strict=True)):
                products.append(square)
    return sorted(products, key=BasicProduct.sort_key)
