# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Reading polynomial expressions such as ``b4^2 - 2*b2^2*b4`` into elements."""

from __future__ import annotations

from fractions import Fraction
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from strata_betti.exceptions import ExpressionParseError, UnknownGeneratorError

from .algebra import AlgebraSpec, Element

_TRANSFORMATIONS = (*standard_transformations, convert_xor)


def parse_element(algebra: AlgebraSpec, text: str) -> Element:
    """Parse an expression in the generator names of an algebra.

    Powers may be written with ``^`` or ``**`` and coefficients may be rationals like
    ``1/4``. Products are multiplied in the order they are written, so ``v7*v5`` is
    ``-v5*v7`` when both generators are odd. Odd generators raised to a power >= 2 give 0.

    Parameters
    ----------
    algebra : AlgebraSpec
        The algebra whose generator names may occur in the text.
    text : str
        The expression.

    Returns
    -------
    Element
        The parsed element.

    Raises
    ------
    UnknownGeneratorError
        If the text uses a name that is not a generator.
    ExpressionParseError
        If the text is not a polynomial with rational coefficients.
    """
    # odd generators do not commute with each other; sympy keeps their order
    symbols = {
        generator.name: sympy.Symbol(generator.name, commutative=not generator.is_odd)
        for generator in algebra.generators
    }
    try:
        expression = parse_expr(
            text, local_dict=dict(symbols), transformations=_TRANSFORMATIONS, evaluate=True
        )
    except (SyntaxError, TokenError, TypeError, ValueError, sympy.SympifyError) as error:
        msg = f"Can not parse '{text}': {error}"
        raise ExpressionParseError(msg) from error

    if not isinstance(expression, sympy.Expr):
        msg = f"'{text}' is not an algebraic expression."
        raise ExpressionParseError(msg)

    known = set(symbols.values())
    for symbol in sorted(expression.free_symbols, key=str):
        if symbol not in known:
            raise UnknownGeneratorError(str(symbol))

    return _evaluate(algebra, expression, text)


def _evaluate(algebra: AlgebraSpec, node: sympy.Expr, text: str) -> Element:
    if node.is_Symbol:
        return algebra.generator(node.name)
    if node.is_Number:
        return algebra.one() * _to_fraction(node, text)
    if node.is_Add:
        result = algebra.zero()
        for arg in node.args:
            result = result + _evaluate(algebra, arg, text)
        return result
    if node.is_Mul:
        # commutative factors come first in args, the odd ones keep the written order
        result = algebra.one()
        for arg in node.args:
            result = result * _evaluate(algebra, arg, text)
        return result
    if node.is_Pow:
        base, exponent = node.args
        if not (exponent.is_Integer and exponent >= 0):
            msg = f"'{text}' is not a polynomial: exponent {exponent}."
            raise ExpressionParseError(msg)
        return _evaluate(algebra, base, text) ** int(exponent)
    msg = f"'{text}' is not a polynomial with rational coefficients."
    raise ExpressionParseError(msg)


def _to_fraction(value: sympy.Expr, text: str) -> Fraction:
    if not value.is_Rational:
        msg = f"Coefficient {value} in '{text}' is not rational."
        raise ExpressionParseError(msg)
    return Fraction(int(value.p), int(value.q))
