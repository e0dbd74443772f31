# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from fractions import Fraction

import pytest

from strata_betti.algebra import make_algebra, parse_element
from strata_betti.exceptions import ExpressionParseError, UnknownGeneratorError


def test_parse_element__sum(mr2):
    algebra = mr2.algebra
    b2, v5, v7 = (algebra.generator(name) for name in algebra.names)
    assert parse_element(algebra, "b2*v5 + 4*v7") == b2 * v5 + 4 * v7


def test_parse_element__caret_and_double_star(mr2):
    algebra = mr2.algebra
    assert parse_element(algebra, "b2^3") == parse_element(algebra, "b2**3")


def test_parse_element__rational_coefficient(mr2):
    algebra = mr2.algebra
    element = parse_element(algebra, "1/4*b2^4")
    assert element == algebra.generator("b2") ** 4 * Fraction(1, 4)
    assert str(element) == "1/4*b2^4"


def test_parse_element__odd_factors_anticommute(mr2):
    algebra = mr2.algebra
    v5, v7 = algebra.generator("v5"), algebra.generator("v7")
    assert parse_element(algebra, "v7*v5") == v7 * v5
    assert parse_element(algebra, "v7*v5") == -parse_element(algebra, "v5*v7")
    assert str(parse_element(algebra, "v7*v5")) == "-v5*v7"


def test_parse_element__even_factors_commute(mr2):
    algebra = mr2.algebra
    assert parse_element(algebra, "v7*b2*v5") == parse_element(algebra, "-b2*v5*v7")
    assert parse_element(algebra, "v5*b2") == parse_element(algebra, "b2*v5")


def test_parse_element__order_kept_inside_parentheses(mr3):
    algebra = mr3.algebra
    v7, v9, v11 = (algebra.generator(name) for name in ("v7", "v9", "v11"))
    assert parse_element(algebra, "(v9 + v11)*v7") == (v9 + v11) * v7
    assert parse_element(algebra, "(v9 + v11)*v7") == -(v7 * v9) - v7 * v11


def test_parse_element__rendering_parses_back(mr2, rng, random_element):
    for _ in range(50):
        element = random_element(mr2.algebra, rng.randint(0, 20))
        assert parse_element(mr2.algebra, str(element)) == element


@pytest.mark.parametrize("text", ["b2^(-1)", "1/b2", "b2^(1/2)", "0.5*b2", "sin(b2)"])
def test_parse_element__not_a_polynomial(mr2, text):
    with pytest.raises(ExpressionParseError):
        parse_element(mr2.algebra, text)


def test_parse_element__odd_square_is_zero(mr2):
    assert parse_element(mr2.algebra, "v5^2") == 0
    assert parse_element(mr2.algebra, "v5^2 + b2") == mr2.algebra.generator("b2")


def test_parse_element__constant(mr2):
    assert parse_element(mr2.algebra, "3") == 3
    assert parse_element(make_algebra([]), "2/3") == Fraction(2, 3)


def test_parse_element__expands_products(mr3):
    algebra = mr3.algebra
    b2, b4 = algebra.generator("b2"), algebra.generator("b4")
    assert parse_element(algebra, "(b2^2 - b4)*b4") == b2**2 * b4 - b4**2


def test_parse_element__unknown_generator(mr2):
    with pytest.raises(UnknownGeneratorError):
        parse_element(mr2.algebra, "b2*v9")


def test_parse_element__syntax_error(mr2):
    with pytest.raises(ExpressionParseError):
        parse_element(mr2.algebra, "b2 +")


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
