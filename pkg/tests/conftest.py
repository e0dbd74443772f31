# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import random
import typing as t
from fractions import Fraction

import pytest

from strata_betti.algebra import AlgebraSpec, Element, degree_basis, make_algebra
from strata_betti.cohomology import DgaModel
from strata_betti.models import moller_raussen


@pytest.fixture
def mr2() -> DgaModel:
    return moller_raussen(2)


@pytest.fixture
def mr3() -> DgaModel:
    return moller_raussen(3)


@pytest.fixture
def mixed_algebra() -> AlgebraSpec:
    return make_algebra([("a1", 1), ("b2", 2), ("c3", 3), ("e4", 4), ("f5", 5)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)


@pytest.fixture
def random_element(rng) -> t.Callable[[AlgebraSpec, int], Element]:
    """Draw homogeneous elements with small rational coefficients, reproducibly."""

    def _draw(algebra: AlgebraSpec, degree: int) -> Element:
        terms = {}
        for monomial in degree_basis(algebra, degree):
            if rng.random() < 0.7:
                terms[monomial] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        return Element(algebra, terms)

    return _draw
