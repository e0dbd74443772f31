# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import re

from strata_betti.exceptions import PartitionSyntaxError
from strata_betti.gerstenhaber import Partition

_TOKEN = re.compile(r"(?P<part>\d+)(?:\^(?P<multiplicity>\d+))?")


def parse_partition(text: str) -> Partition:
    """Parse a partition such as ``1^3 2``.

    The text is a whitespace separated list of tokens ``a`` or ``a^m`` with a >= 1 and m >= 0;
    the partition is the multiset union of the tokens. The empty text is the empty partition.

    Raises
    ------
    PartitionSyntaxError
        If a token is malformed or has a part equal to 0.
    """
    parts: list[int] = []
    for token in text.split():
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise PartitionSyntaxError(token, "expected 'a' or 'a^m' with integers a >= 1, m >= 0")
        part = int(match["part"])
        if part < 1:
            raise PartitionSyntaxError(token, "parts must be >= 1")
        multiplicity = int(match["multiplicity"]) if match["multiplicity"] is not None else 1
        parts.extend([part] * multiplicity)
    return Partition(tuple(parts))


def render_partition(partition: Partition) -> str:
    """Return the canonical text of a partition; parsing it gives the partition back."""
    return partition.render()
