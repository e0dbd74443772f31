# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import pytest

from strata_betti.exceptions import PartitionSyntaxError
from strata_betti.gerstenhaber import Partition
from strata_betti.strata import parse_partition, render_partition


def test_parse_partition__powers():
    partition = parse_partition("1^3 2")
    assert partition.multiplicities == (3, 1)
    assert partition == Partition((1, 1, 1, 2))


def test_parse_partition__plain_parts():
    assert parse_partition("2 3").multiplicities == (0, 1, 1)


def test_parse_partition__zero_multiplicity():
    assert parse_partition("1^0 2") == Partition((2,))


def test_parse_partition__multiset_union():
    assert parse_partition("2 1^2 2^2 1") == Partition((1, 1, 1, 2, 2, 2))


def test_parse_partition__empty():
    assert parse_partition("") == Partition(())
    assert parse_partition("   ") == Partition(())


@pytest.mark.parametrize("text", ["0", "1^", "a", "1^-1", "2^x", "1,2", "-1"])
def test_parse_partition__invalid(text):
    with pytest.raises(PartitionSyntaxError):
        parse_partition(text)


def test_parse_partition__error_names_token():
    with pytest.raises(PartitionSyntaxError, match="'0\\^2'"):
        parse_partition("1 0^2")


def test_render_partition__parses_back():
    for text in ["1^3 2", "2 3", "1^5 2 3^2", "4"]:
        partition = parse_partition(text)
        assert render_partition(partition) == text
        assert parse_partition(render_partition(partition)) == partition


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
