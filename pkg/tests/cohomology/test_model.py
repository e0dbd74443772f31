# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import pytest

from strata_betti.algebra import make_algebra
from strata_betti.cohomology import (
    DgaModel,
    betti_table,
    make_derivation,
    reorder_generators,
    transport,
)
from strata_betti.exceptions import AlgebraMismatchError, DifferentialSquareError


def test_dga_model__rejects_nonzero_square():
    algebra = make_algebra([("x2", 2), ("y3", 3)])
    d = make_derivation(algebra, {"x2": "y3", "y3": "x2^2"})
    with pytest.raises(DifferentialSquareError, match="x2"):
        DgaModel(algebra, d)


def test_dga_model__rejects_foreign_differential():
    algebra = make_algebra([("x2", 2)])
    other = make_algebra([("y2", 2)])
    with pytest.raises(AlgebraMismatchError):
        DgaModel(algebra, make_derivation(other, {}))


def test_dga_model__d(mr2):
    b2, v5 = mr2.algebra.generator("b2"), mr2.algebra.generator("v5")
    assert mr2.d(v5) == -(b2**3)
    assert mr2.d(mr2.d(v5)) == 0


def test_transport__koszul_sign(mr2):
    permuted = make_algebra([("v7", 7), ("v5", 5), ("b2", 2)])
    v5v7 = mr2.algebra.generator("v5") * mr2.algebra.generator("v7")
    moved = transport(v5v7, permuted)
    assert moved == permuted.generator("v5") * permuted.generator("v7")
    assert moved == -(permuted.generator("v7") * permuted.generator("v5"))


def test_reorder_generators__same_betti_table(mr2, mr3):
    for model, names in (
        (mr2, ["v7", "v5", "b2"]),
        (mr3, ["v11", "b4", "v7", "b2", "v9"]),
    ):
        reordered = reorder_generators(model, names)
        assert reordered.algebra.names == names
        assert betti_table(reordered, 16) == betti_table(model, 16)


def test_reorder_generators__differential_transported(mr2):
    reordered = reorder_generators(mr2, ["v7", "b2", "v5"])
    algebra = reordered.algebra
    assert reordered.d(algebra.generator("v5")) == -(algebra.generator("b2") ** 3)


def test_reorder_generators__not_a_permutation(mr2):
    with pytest.raises(ValueError):
        reorder_generators(mr2, ["b2", "v5"])


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
