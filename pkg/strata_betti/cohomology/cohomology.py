# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from tqdm import tqdm

from strata_betti.algebra import AlgebraSpec, Element, Monomial, degree_basis
from strata_betti.exceptions import NotACocycleError

from ._linalg import SparseVector, _EchelonBasis, reduced_row_echelon
from .model import DgaModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomologyReport:
    """The cohomology of a model in one degree.

    The representatives are canonical for the fixed generator order: they are the reduced
    row echelon basis of the closed elements that vanish on every pivot coordinate of the
    coboundaries.
    """

    degree: int
    betti: int
    representatives: tuple[Element, ...]


@lru_cache(maxsize=4096)
def _basis_positions(algebra: AlgebraSpec, n: int) -> dict[Monomial, int]:
    return {monomial: position for position, monomial in enumerate(degree_basis(algebra, n))}


def _coordinates(element: Element, n: int) -> SparseVector:
    positions = _basis_positions(element.algebra, n)
    return {positions[monomial]: coefficient for monomial, coefficient in element.terms.items()}


def _element(algebra: AlgebraSpec, n: int, vector: SparseVector) -> Element:
    basis = degree_basis(algebra, n)
    return Element(algebra, {basis[position]: value for position, value in vector.items()})


@lru_cache(maxsize=1024)
def _differential_echelon(model: DgaModel, n: int) -> _EchelonBasis:
    """Echelon basis of d(C^n) inside C^(n+1); tags are positions in the degree n basis."""
    echelon = _EchelonBasis()
    if n < 0:
        return echelon
    for position, monomial in enumerate(degree_basis(model.algebra, n)):
        image = model.d(Element(model.algebra, {monomial: Fraction(1)}))
        echelon.insert(_coordinates(image, n + 1), position)
    logger.debug(
        "d on C^%d: dim %d, rank %d", n, len(degree_basis(model.algebra, n)), echelon.rank
    )
    return echelon


def _coboundaries(model: DgaModel, n: int) -> _EchelonBasis:
    """Echelon basis of the coboundaries in degree n."""
    return _differential_echelon(model, n - 1)


def cochain_dimension(model: DgaModel, n: int) -> int:
    """Return dim C^n."""
    return len(degree_basis(model.algebra, n))


def rank_of_differential(model: DgaModel, n: int) -> int:
    """Return the rank of d: C^n -> C^(n+1)."""
    return _differential_echelon(model, n).rank


def cohomology_in_degree(model: DgaModel, n: int) -> CohomologyReport:
    """Compute H^n of a model with representative cocycles.

    Parameters
    ----------
    model : DgaModel
        The model.
    n : int
        The degree, >= 0.

    Returns
    -------
    CohomologyReport
        Betti number and a canonical basis of representatives.
    """
    if n < 0:
        msg = f"Degrees are nonnegative, got {n}."
        raise ValueError(msg)

    kernel = _differential_echelon(model, n).kernel
    coboundaries = _coboundaries(model, n)
    residues = [coboundaries.reduce(vector)[0] for vector in kernel]
    representatives = tuple(
        _element(model.algebra, n, row) for row in reduced_row_echelon(residues)
    )
    betti = len(kernel) - coboundaries.rank
    if betti != len(representatives):
        msg = f"Inconsistent cohomology in degree {n}: {betti} != {len(representatives)}."
        raise AssertionError(msg)
    return CohomologyReport(degree=n, betti=betti, representatives=representatives)


def betti_table(model: DgaModel, max_degree: int, progress: bool = False) -> list[tuple[int, int]]:
    """Return (degree, betti) for all degrees 0..max_degree."""
    return [
        (n, cohomology_in_degree(model, n).betti)
        for n in tqdm(
            range(max_degree + 1),
            desc=f"Cohomology {model.label}".rstrip(),
            disable=not progress,
        )
    ]


def is_coboundary(model: DgaModel, z: Element) -> tuple[bool, Element | None]:
    """Decide whether a closed element is a coboundary.

    Parameters
    ----------
    model : DgaModel
        The model.
    z : Element
        A homogeneous closed element.

    Returns
    -------
    tuple[bool, Element | None]
        (True, w) with d(w) = z, or (False, None).

    Raises
    ------
    NotACocycleError
        If d(z) is not zero.
    """
    if not z:
        return True, model.algebra.zero()
    if model.d(z):
        raise NotACocycleError(str(z))
    n = z.degree
    if n is None:
        msg = f"{z} is not homogeneous."
        raise ValueError(msg)

    solution = _coboundaries(model, n).solve(_coordinates(z, n))
    if solution is None:
        return False, None
    return True, _element(model.algebra, n - 1, solution)


def reduce_modulo_coboundaries(model: DgaModel, z: Element, n: int) -> SparseVector:
    """Return the coordinates of a degree n element after reducing it by the coboundaries.

    The reduction is linear, and it vanishes exactly on coboundaries.
    """
    if not z:
        return {}
    return _coboundaries(model, n).reduce(_coordinates(z, n))[0]
