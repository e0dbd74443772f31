# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .algebra import (
    UNIT,
    AlgebraSpec,
    Element,
    GeneratorSpec,
    Monomial,
    make_algebra,
    monomial_product,
)
from .degree_basis import degree_basis
from .parse import parse_element

__all__ = [
    "UNIT",
    "AlgebraSpec",
    "Element",
    "GeneratorSpec",
    "Monomial",
    "degree_basis",
    "make_algebra",
    "monomial_product",
    "parse_element",
]
