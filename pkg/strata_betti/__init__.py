# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Rational Betti tables of partition strata of symmetric products and of mapping spaces."""

from importlib import metadata

from .algebra import AlgebraSpec, Element, degree_basis, make_algebra, parse_element
from .cohomology import (
    DgaModel,
    betti_table,
    cohomology_in_degree,
    is_coboundary,
    make_derivation,
    make_ring_presentation,
    verify_ring_presentation,
)
from .gerstenhaber import Partition, stable_stratum_betti, stratum_basis, stratum_betti_table
from .issue import Issue, IssueIdentifiers, IssueType
from .models import moller_raussen, section_space_series
from .presentations import get_presentation_path, list_available_presentations, load_presentation
from .strata import compare_formulas, parse_partition, stable_betti, stable_range_bound
from .verification import verify

try:
    __version__ = metadata.version("strata-betti")
except metadata.PackageNotFoundError:
    __version__ = "0.0.0+unknown"
del metadata

__all__ = [
    "AlgebraSpec",
    "DgaModel",
    "Element",
    "Issue",
    "IssueIdentifiers",
    "IssueType",
    "Partition",
    "betti_table",
    "cohomology_in_degree",
    "compare_formulas",
    "degree_basis",
    "get_presentation_path",
    "is_coboundary",
    "list_available_presentations",
    "load_presentation",
    "make_algebra",
    "make_derivation",
    "make_ring_presentation",
    "moller_raussen",
    "parse_element",
    "parse_partition",
    "section_space_series",
    "stable_betti",
    "stable_range_bound",
    "stable_stratum_betti",
    "stratum_basis",
    "stratum_betti_table",
    "verify",
    "verify_ring_presentation",
]
