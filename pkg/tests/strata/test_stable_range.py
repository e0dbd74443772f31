# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import pytest

from strata_betti.exceptions import RuleNotApplicableError
from strata_betti.strata import StableRangeRule, stable_range_bound


def test_segal():
    assert stable_range_bound(StableRangeRule.SEGAL, degree=10).min_j == 5
    assert stable_range_bound(StableRangeRule.SEGAL, degree=11).min_j == 6


def test_rw():
    bound = stable_range_bound(StableRangeRule.RW, degree=10, d=2)
    assert bound.min_j == 10
    assert bound.max_stable_degree is None


def test_rw__real_dimension_two():
    with pytest.raises(RuleNotApplicableError):
        stable_range_bound(StableRangeRule.RW, degree=10, d=1)


def test_w1j2_range():
    bound = stable_range_bound(StableRangeRule.W1J2, d=2, j=7)
    assert bound.max_stable_degree == 20
    assert bound.min_j is None


def test_w1j2_range__from_degree():
    assert stable_range_bound(StableRangeRule.W1J2, degree=20, d=2).min_j == 7
    assert stable_range_bound(StableRangeRule.W1J2, degree=21, d=2).min_j == 8


def test_describe():
    bound = stable_range_bound(StableRangeRule.W1J2, degree=20, d=2, j=7)
    assert bound.describe() == "w1j2: j >= 7, stable for degrees <= 20"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"rule": StableRangeRule.SEGAL},
        {"rule": StableRangeRule.RW, "degree": 3},
        {"rule": StableRangeRule.RW, "d": 2},
        {"rule": StableRangeRule.W1J2, "d": 2},
    ],
)
def test_missing_parameters(kwargs):
    with pytest.raises(ValueError):
        stable_range_bound(**kwargs)


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
