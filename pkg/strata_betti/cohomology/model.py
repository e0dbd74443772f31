# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from strata_betti.algebra import AlgebraSpec, Element, make_algebra
from strata_betti.exceptions import AlgebraMismatchError, DifferentialSquareError

from .derivation import Derivation, apply_derivation, check_d_squared


@dataclass(frozen=True)
class DgaModel:
    """A free graded-commutative algebra with a differential.

    The differential is checked to square to zero on construction.
    """

    algebra: AlgebraSpec
    differential: Derivation
    label: str = ""

    def __post_init__(self) -> None:
        if self.differential.algebra != self.algebra:
            raise AlgebraMismatchError
        counterexample = check_d_squared(
            self.differential, max(self.algebra.degrees, default=0) + 2
        )
        if counterexample is not None:
            raise DifferentialSquareError(counterexample.generator, str(counterexample.value))

    def d(self, element: Element) -> Element:
        """Apply the differential."""
        return apply_derivation(self.differential, element)


def transport(element: Element, target: AlgebraSpec) -> Element:
    """Rewrite an element in an algebra with the same generators in another order."""
    result = target.zero()
    source = element.algebra
    for monomial, coefficient in element.terms.items():
        product = target.one()
        for index, exponent in monomial.factors:
            product = product * target.generator(source.generators[index].name) ** exponent
        result = result + product * coefficient
    return result


def reorder_generators(model: DgaModel, names: Sequence[str]) -> DgaModel:
    """Return the same model over a permuted generator order.

    Parameters
    ----------
    model : DgaModel
        The model to permute.
    names : Sequence[str]
        All generator names of the model in their new order.

    Returns
    -------
    DgaModel
        The model with the new generator order; Koszul signs are applied when rewriting the
        differential.
    """
    if sorted(names) != sorted(model.algebra.names):
        msg = f"{list(names)} is not a permutation of {model.algebra.names}."
        raise ValueError(msg)

    algebra = make_algebra((name, model.algebra.spec(name).degree) for name in names)
    images = tuple(transport(model.differential.image(name), algebra) for name in names)
    return DgaModel(algebra, Derivation(algebra, images), model.label)
