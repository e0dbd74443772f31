# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from fractions import Fraction

import pytest

from strata_betti.cohomology import betti_table, check_d_squared
from strata_betti.models import moller_raussen


def test_moller_raussen__m2(mr2):
    algebra = mr2.algebra
    b2 = algebra.generator("b2")
    assert algebra.names == ["b2", "v5", "v7"]
    assert mr2.differential.image("b2") == 0
    assert mr2.differential.image("v5") == -(b2**3)
    assert mr2.differential.image("v7") == b2**4 * Fraction(1, 4)
    assert mr2.label == "MR(2)"


def test_moller_raussen__m3(mr3):
    algebra = mr3.algebra
    b2, b4 = algebra.generator("b2"), algebra.generator("b4")
    assert algebra.names == ["b2", "b4", "v7", "v9", "v11"]
    assert mr3.differential.image("v7") == b4**2 - 2 * b2**2 * b4
    assert mr3.differential.image("v9") == -2 * b2 * b4**2
    assert mr3.differential.image("v11") == b2**2 * b4**2


def test_moller_raussen__m1():
    model = moller_raussen(1)
    assert model.algebra.names == ["v3"]
    assert model.differential.image("v3") == 0
    assert [b for _, b in betti_table(model, 6)] == [1, 0, 0, 1, 0, 0, 0]


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_moller_raussen__d_squared_vanishes(m):
    model = moller_raussen(m)
    assert check_d_squared(model.differential, 4 * m + 1) is None


def test_moller_raussen__generator_degrees():
    model = moller_raussen(4)
    assert model.algebra.degrees == [2, 4, 6, 9, 11, 13, 15]


def test_moller_raussen__cached():
    assert moller_raussen(3) is moller_raussen(3)


def test_moller_raussen__invalid_m():
    with pytest.raises(ValueError):
        moller_raussen(0)


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
