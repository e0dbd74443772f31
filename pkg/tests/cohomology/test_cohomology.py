# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import pytest

from strata_betti.algebra import make_algebra
from strata_betti.cohomology import (
    DgaModel,
    betti_table,
    cochain_dimension,
    cohomology_in_degree,
    is_coboundary,
    make_derivation,
    rank_of_differential,
    reduce_modulo_coboundaries,
)
from strata_betti.exceptions import NotACocycleError


@pytest.fixture
def zero_model():
    algebra = make_algebra([("b2", 2), ("v5", 5), ("v7", 7)])
    return DgaModel(algebra, make_derivation(algebra, {}), label="zero")


def test_cohomology_in_degree__mr2_degree_7(mr2):
    report = cohomology_in_degree(mr2, 7)
    assert report.degree == 7
    assert report.betti == 1
    assert str(report.representatives[0]) == "b2*v5 + 4*v7"


def test_cohomology_in_degree__mr2_degree_5(mr2):
    report = cohomology_in_degree(mr2, 5)
    assert report.betti == 0
    assert report.representatives == ()


def test_cohomology_in_degree__degree_zero(mr2, mr3, zero_model):
    for model in (mr2, mr3, zero_model):
        report = cohomology_in_degree(model, 0)
        assert report.betti == 1
        assert report.representatives == (model.algebra.one(),)


def test_cohomology_in_degree__negative_degree(mr2):
    with pytest.raises(ValueError):
        cohomology_in_degree(mr2, -1)


def test_cohomology_in_degree__representatives_are_closed_and_not_exact(mr3):
    for n in range(25):
        for representative in cohomology_in_degree(mr3, n).representatives:
            assert mr3.d(representative) == 0
            assert is_coboundary(mr3, representative) == (False, None)


def test_cohomology_in_degree__mr3_degree_11(mr3):
    report = cohomology_in_degree(mr3, 11)
    assert report.betti == 1
    algebra = mr3.algebra
    expected = algebra.generator("b2") * algebra.generator("v9") + 2 * algebra.generator("v11")
    representative = report.representatives[0]
    scale = representative.coefficient(next(iter(expected.terms)))
    assert scale != 0
    assert representative == expected * scale


def test_betti_table__mr2(mr2):
    assert [b for _, b in betti_table(mr2, 12)] == [1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0]


def test_betti_table__mr2_vanishes_beyond_11(mr2):
    table = dict(betti_table(mr2, 40))
    assert [n for n, b in table.items() if b] == [0, 2, 4, 7, 9, 11]


def test_betti_table__mr3(mr3):
    assert [b for _, b in betti_table(mr3, 12)] == [1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 1, 1, 1]


def test_betti_table__zero_differential(zero_model):
    assert [b for _, b in betti_table(zero_model, 7)] == [1, 0, 1, 0, 1, 1, 1, 2]


def test_betti_table__degrees(mr2):
    assert [n for n, _ in betti_table(mr2, 4)] == [0, 1, 2, 3, 4]


def test_rank_nullity(mr2, mr3):
    for model in (mr2, mr3):
        for n in range(1, 24):
            kernel = cochain_dimension(model, n) - rank_of_differential(model, n)
            betti = cohomology_in_degree(model, n).betti
            assert betti == kernel - rank_of_differential(model, n - 1)


def test_is_coboundary__b2_cubed(mr2):
    b2, v5 = mr2.algebra.generator("b2"), mr2.algebra.generator("v5")
    assert is_coboundary(mr2, b2**3) == (True, -v5)


def test_is_coboundary__b2_squared(mr2):
    assert is_coboundary(mr2, mr2.algebra.generator("b2") ** 2) == (False, None)


def test_is_coboundary__zero(mr2):
    bounded, witness = is_coboundary(mr2, mr2.algebra.zero())
    assert bounded
    assert witness == 0


def test_is_coboundary__witness(mr3):
    algebra = mr3.algebra
    z = mr3.d(algebra.generator("b2") * algebra.generator("v9") + algebra.generator("v11"))
    bounded, witness = is_coboundary(mr3, z)
    assert bounded
    assert mr3.d(witness) == z


def test_is_coboundary__not_a_cocycle(mr2):
    with pytest.raises(NotACocycleError):
        is_coboundary(mr2, mr2.algebra.generator("v5"))


def test_reduce_modulo_coboundaries(mr2):
    b2 = mr2.algebra.generator("b2")
    assert reduce_modulo_coboundaries(mr2, b2**3, 6) == {}
    assert reduce_modulo_coboundaries(mr2, b2**2, 4) != {}


def test_betti_table__progress_does_not_change_values(mr2, capsys):
    assert betti_table(mr2, 8, progress=True) == betti_table(mr2, 8)


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
