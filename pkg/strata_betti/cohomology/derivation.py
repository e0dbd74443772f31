# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache

from strata_betti.algebra import AlgebraSpec, Element, Monomial, parse_element
from strata_betti.exceptions import DerivationDegreeError


@dataclass(frozen=True)
class Derivation:
    """A degree +1 derivation, given by the images of the generators in algebra order."""

    algebra: AlgebraSpec
    images: tuple[Element, ...]

    def image(self, name: str) -> Element:
        """Return the image of the generator with the given name."""
        return self.images[self.algebra.spec(name).index]


@dataclass(frozen=True)
class DSquaredCounterexample:
    """A generator on which the derivation does not square to zero."""

    generator: str
    value: Element


def make_derivation(
    algebra: AlgebraSpec, images: Mapping[str, Element | str | int]
) -> Derivation:
    """Create a derivation from the images of generators.

    Parameters
    ----------
    algebra : AlgebraSpec
        The algebra the derivation acts on.
    images : Mapping[str, Element | str | int]
        Generator name to image. Images may be elements, expressions in the generator names or
        0. Generators that are not listed are closed. The square of the derivation is not
        checked here.

    Returns
    -------
    Derivation
        The derivation.

    Raises
    ------
    UnknownGeneratorError
        If a key is not a generator name.
    DerivationDegreeError
        If an image is not homogeneous of degree (generator degree + 1).
    """
    for name in images:
        algebra.spec(name)

    resolved = []
    for generator in algebra.generators:
        image = _as_element(algebra, images.get(generator.name, 0))
        if not image.is_homogeneous(generator.degree + 1):
            raise DerivationDegreeError(generator.name, generator.degree + 1, image.degree)
        resolved.append(image)
    return Derivation(algebra, tuple(resolved))


def _as_element(algebra: AlgebraSpec, value: Element | str | int) -> Element:
    if isinstance(value, Element):
        return value
    if isinstance(value, str):
        return parse_element(algebra, value)
    return algebra.one() * value


@lru_cache(maxsize=65536)
def _derive_monomial(derivation: Derivation, monomial: Monomial) -> Element:
    algebra = derivation.algebra
    result = algebra.zero()
    left_degree = 0
    for position, (index, exponent) in enumerate(monomial.factors):
        image = derivation.images[index]
        if image:
            left = Element(algebra, {Monomial(monomial.factors[:position], left_degree): 1})
            remaining = monomial.factors[position + 1 :]
            if exponent > 1:
                remaining = ((index, exponent - 1), *remaining)
            rest_degree = monomial.degree - left_degree - algebra.generators[index].degree
            rest = Element(algebra, {Monomial(remaining, rest_degree): 1})
            sign = -1 if left_degree % 2 else 1
            result = result + (left * image * rest) * (sign * exponent)
        left_degree += exponent * algebra.generators[index].degree
    return result


def apply_derivation(derivation: Derivation, element: Element) -> Element:
    """Apply a derivation with the graded Leibniz rule.

    On a monomial g1*...*gk the value is the sum over factors of
    (-1)^(degree of the factors to the left) * g1*...*d(gi)*...*gk.
    """
    result = derivation.algebra.zero()
    for monomial, coefficient in element.terms.items():
        result = result + _derive_monomial(derivation, monomial) * coefficient
    return result


def check_d_squared(derivation: Derivation, max_degree: int) -> DSquaredCounterexample | None:
    """Check that the derivation squares to zero.

    A derivation of odd degree squares to a derivation, so checking the generators suffices.

    Parameters
    ----------
    derivation : Derivation
        The derivation to check.
    max_degree : int
        Working degree bound, at least the largest generator degree plus 2.

    Returns
    -------
    DSquaredCounterexample | None
        None if d(d(g)) vanishes on every generator, else the first failing generator.
    """
    largest = max(derivation.algebra.degrees, default=0)
    if max_degree < largest + 2:
        msg = f"max_degree must be at least {largest + 2}, got {max_degree}."
        raise ValueError(msg)

    for generator, image in zip(derivation.algebra.generators, derivation.images, strict=True):
        value = apply_derivation(derivation, image)
        if value:
            return DSquaredCounterexample(generator.name, value)
    return None
