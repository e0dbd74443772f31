# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Free graded-commutative algebras over the rationals.

An algebra is fixed by an ordered list of generators with positive degrees. Monomials are
kept in normal form (factors sorted by generator index) and products pick up the Koszul sign
of reordering the odd-degree symbols. Odd generators square to zero.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from strata_betti.exceptions import (
    AlgebraMismatchError,
    DuplicateGeneratorError,
    InvalidDegreeError,
    UnknownGeneratorError,
)

Scalar = int | Fraction


@dataclass(frozen=True)
class GeneratorSpec:
    """A single generator of a free graded-commutative algebra."""

    name: str
    degree: int
    index: int

    @property
    def is_odd(self) -> bool:
        """Return True if the generator squares to zero."""
        return self.degree % 2 == 1


@dataclass(frozen=True)
class Monomial:
    """A product of generators in normal form.

    Parameters
    ----------
    factors : tuple[tuple[int, int], ...]
        Pairs of (generator index, exponent), strictly increasing in the index and with
        exponents >= 1. The empty tuple is the unit monomial 1.
    degree : int
        Total degree, the sum of exponent times generator degree.
    """

    factors: tuple[tuple[int, int], ...]
    degree: int

    def __post_init__(self) -> None:
        previous = -1
        for index, exponent in self.factors:
            if index <= previous or exponent < 1:
                msg = f"Monomial factors {self.factors} are not in normal form."
                raise ValueError(msg)
            previous = index

    @property
    def is_unit(self) -> bool:
        """Return True for the empty product."""
        return not self.factors

    def exponent_vector(self, size: int) -> tuple[int, ...]:
        """Return the dense exponent vector of length ``size``."""
        vector = [0] * size
        for index, exponent in self.factors:
            vector[index] = exponent
        return tuple(vector)

    def exponent(self, index: int) -> int:
        """Return the exponent of the generator with the given index."""
        for factor_index, exponent in self.factors:
            if factor_index == index:
                return exponent
        return 0


UNIT = Monomial((), 0)


@dataclass(frozen=True)
class AlgebraSpec:
    """An ordered list of generators. The order never changes after construction."""

    generators: tuple[GeneratorSpec, ...]
    _by_name: Mapping[str, GeneratorSpec] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        by_name: dict[str, GeneratorSpec] = {}
        for position, generator in enumerate(self.generators):
            if generator.index != position:
                msg = f"Generator '{generator.name}' has index {generator.index}, not {position}."
                raise ValueError(msg)
            if generator.degree < 1:
                raise InvalidDegreeError(generator.name, generator.degree)
            if generator.name in by_name:
                raise DuplicateGeneratorError(generator.name)
            by_name[generator.name] = generator
        object.__setattr__(self, "_by_name", MappingProxyType(by_name))

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> list[str]:
        """Generator names in algebra order."""
        return [generator.name for generator in self.generators]

    @property
    def degrees(self) -> list[int]:
        """Generator degrees in algebra order."""
        return [generator.degree for generator in self.generators]

    def spec(self, name: str) -> GeneratorSpec:
        """Return the GeneratorSpec with the given name.

        Raises
        ------
        UnknownGeneratorError
            If the algebra has no generator of that name.
        """
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None

    def monomial(self, exponents: Sequence[int]) -> Monomial | None:
        """Build a monomial from a dense exponent vector.

        Returns None if an odd generator is raised to a power >= 2, since such products
        vanish.
        """
        if len(exponents) != len(self.generators):
            msg = f"Expected {len(self.generators)} exponents, got {len(exponents)}."
            raise ValueError(msg)
        factors = []
        degree = 0
        for generator, exponent in zip(self.generators, exponents, strict=True):
            if exponent < 0:
                msg = f"Negative exponent {exponent} for '{generator.name}'."
                raise ValueError(msg)
            if exponent == 0:
                continue
            if generator.is_odd and exponent > 1:
                return None
            factors.append((generator.index, exponent))
            degree += exponent * generator.degree
        return Monomial(tuple(factors), degree)

    def generator(self, name: str) -> Element:
        """Return the generator with the given name as an element."""
        spec = self.spec(name)
        return Element(self, {Monomial(((spec.index, 1),), spec.degree): Fraction(1)})

    def one(self) -> Element:
        """Return the unit element."""
        return Element(self, {UNIT: Fraction(1)})

    def zero(self) -> Element:
        """Return the zero element."""
        return Element(self, {})

    def odd_indices(self, monomial: Monomial) -> list[int]:
        """Return the indices of the odd generators occurring in the monomial."""
        return [index for index, _ in monomial.factors if self.generators[index].is_odd]

    def render_monomial(self, monomial: Monomial) -> str:
        """Render a monomial as ``b2^2*v5``; the unit renders as ``1``."""
        if monomial.is_unit:
            return "1"
        parts = []
        for index, exponent in monomial.factors:
            name = self.generators[index].name
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts)

    def sort_key(self, monomial: Monomial) -> tuple[int, tuple[int, ...]]:
        """Order monomials by degree, then by exponent vector lexicographically descending."""
        return monomial.degree, tuple(-e for e in monomial.exponent_vector(len(self)))


def make_algebra(generators: Iterable[tuple[str, int]]) -> AlgebraSpec:
    """Create a free graded-commutative algebra.

    Parameters
    ----------
    generators : Iterable[tuple[str, int]]
        Pairs of (name, degree). The index of each generator is its position in the input.

    Returns
    -------
    AlgebraSpec
        The algebra with the given generator order.

    Raises
    ------
    InvalidDegreeError
        If a degree is below 1.
    DuplicateGeneratorError
        If a name occurs twice.
    """
    return AlgebraSpec(
        tuple(
            GeneratorSpec(name=name, degree=degree, index=index)
            for index, (name, degree) in enumerate(generators)
        )
    )


def monomial_product(
    algebra: AlgebraSpec, a: Monomial, b: Monomial
) -> tuple[int, Monomial] | None:
    """Multiply two monomials of the same algebra.

    Parameters
    ----------
    algebra : AlgebraSpec
        The algebra both monomials belong to.
    a, b : Monomial
        The left and right factor.

    Returns
    -------
    tuple[int, Monomial] | None
        The Koszul sign and the normal-form product, or None if an odd generator occurs in
        both factors.
    """
    odd_a = algebra.odd_indices(a)
    odd_b = algebra.odd_indices(b)
    if set(odd_a) & set(odd_b):
        return None

    # each odd symbol of b passes every larger-indexed odd symbol of a
    inversions = 0
    position = 0
    for index in odd_b:
        while position < len(odd_a) and odd_a[position] < index:
            position += 1
        inversions += len(odd_a) - position

    exponents = dict(a.factors)
    for index, exponent in b.factors:
        exponents[index] = exponents.get(index, 0) + exponent
    product = Monomial(tuple(sorted(exponents.items())), a.degree + b.degree)
    return (-1 if inversions % 2 else 1), product


class Element:
    """A finite rational linear combination of monomials of one algebra.

    Elements are immutable. Zero coefficients are never stored, so the empty term map is 0.
    """

    __slots__ = ("_algebra", "_hash", "_terms")

    def __init__(self, algebra: AlgebraSpec, terms: Mapping[Monomial, Scalar]) -> None:
        self._algebra = algebra
        self._terms: dict[Monomial, Fraction] = {
            monomial: Fraction(coefficient)
            for monomial, coefficient in terms.items()
            if coefficient != 0
        }
        self._hash: int | None = None

    @property
    def algebra(self) -> AlgebraSpec:
        """The algebra the element lives in."""
        return self._algebra

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """Read-only view of the monomial to coefficient map."""
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        """Return True for the zero element."""
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def coefficient(self, monomial: Monomial) -> Fraction:
        """Return the coefficient of a monomial (0 if absent)."""
        return self._terms.get(monomial, Fraction(0))

    @property
    def degree(self) -> int | None:
        """The common degree of all terms, or None for 0 and for inhomogeneous elements."""
        degrees = {monomial.degree for monomial in self._terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Return True if all terms share one degree (and it equals ``degree`` if given)."""
        if not self._terms:
            return True
        if self.degree is None:
            return False
        return degree is None or self.degree == degree

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Return the terms in the deterministic basis order."""
        return sorted(self._terms.items(), key=lambda item: self._algebra.sort_key(item[0]))

    def _check_algebra(self, other: Element) -> None:
        if other._algebra is not self._algebra and other._algebra != self._algebra:
            raise AlgebraMismatchError

    def __add__(self, other: Element | Scalar) -> Element:
        if not isinstance(other, Element):
            other = self._algebra.one() * other
        self._check_algebra(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return Element(self._algebra, terms)

    def __radd__(self, other: Scalar) -> Element:
        return self + other

    def __neg__(self) -> Element:
        return Element(self._algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Element | Scalar) -> Element:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Element:
        return (-self) + other

    def __mul__(self, other: Element | Scalar) -> Element:
        if not isinstance(other, Element):
            if not isinstance(other, int | Fraction):
                return NotImplemented
            return Element(self._algebra, {m: c * other for m, c in self._terms.items()})
        self._check_algebra(other)
        terms: dict[Monomial, Fraction] = {}
        for left, left_coefficient in self._terms.items():
            for right, right_coefficient in other._terms.items():
                result = monomial_product(self._algebra, left, right)
                if result is None:
                    continue
                sign, product = result
                terms[product] = (
                    terms.get(product, Fraction(0)) + sign * left_coefficient * right_coefficient
                )
        return Element(self._algebra, terms)

    def __rmul__(self, other: Scalar) -> Element:
        if not isinstance(other, int | Fraction):
            return NotImplemented
        return self * other

    def __pow__(self, exponent: int) -> Element:
        if exponent < 0:
            msg = "Elements can only be raised to nonnegative powers."
            raise ValueError(msg)
        result = self._algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            return self == self._algebra.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        return self._algebra == other._algebra and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._algebra, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        text = ""
        for monomial, coefficient in self.sorted_terms():
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            body = self._algebra.render_monomial(monomial)
            if monomial.is_unit:
                term = str(magnitude)
            elif magnitude == 1:
                term = body
            else:
                term = f"{magnitude}*{body}"
            if not text:
                text = f"-{term}" if sign == "-" else term
            else:
                text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"Element({self})"
