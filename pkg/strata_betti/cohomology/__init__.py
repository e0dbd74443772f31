# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .cohomology import (
    CohomologyReport,
    betti_table,
    cochain_dimension,
    cohomology_in_degree,
    is_coboundary,
    rank_of_differential,
    reduce_modulo_coboundaries,
)
from .derivation import (
    Derivation,
    DSquaredCounterexample,
    apply_derivation,
    check_d_squared,
    make_derivation,
)
from .model import DgaModel, reorder_generators, transport
from .ring_presentation import (
    PresentationGenerator,
    RingPresentation,
    RingPresentationReport,
    make_ring_presentation,
    verify_ring_presentation,
)

__all__ = [
    "CohomologyReport",
    "DSquaredCounterexample",
    "Derivation",
    "DgaModel",
    "PresentationGenerator",
    "RingPresentation",
    "RingPresentationReport",
    "apply_derivation",
    "betti_table",
    "check_d_squared",
    "cochain_dimension",
    "cohomology_in_degree",
    "is_coboundary",
    "make_derivation",
    "make_ring_presentation",
    "rank_of_differential",
    "reduce_modulo_coboundaries",
    "reorder_generators",
    "transport",
    "verify_ring_presentation",
]
