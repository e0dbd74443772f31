# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from tqdm import tqdm

from strata_betti.algebra import (
    AlgebraSpec,
    Element,
    Monomial,
    degree_basis,
    make_algebra,
    parse_element,
)
from strata_betti.exceptions import AlgebraMismatchError, NotACocycleError
from strata_betti.issue import Issue, IssueIdentifiers, IssueType

from ._linalg import SparseVector, _EchelonBasis
from .cohomology import cohomology_in_degree, is_coboundary, reduce_modulo_coboundaries
from .model import DgaModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PresentationGenerator:
    """A named cohomology class with a representative cocycle."""

    name: str
    degree: int
    representative: Element
    adjustable: bool = False


@dataclass(frozen=True)
class RingPresentation:
    """Generators and relations claimed to present the cohomology ring of a model.

    Relations are elements of ``class_algebra``, the free graded-commutative algebra on the
    named classes.
    """

    generators: tuple[PresentationGenerator, ...]
    relations: tuple[Element, ...]
    class_algebra: AlgebraSpec

    def __post_init__(self) -> None:
        if self.class_algebra.names != [g.name for g in self.generators]:
            msg = "The class algebra must have the presentation generators in order."
            raise ValueError(msg)
        for relation in self.relations:
            if relation.algebra != self.class_algebra:
                raise AlgebraMismatchError
            if not relation.is_homogeneous():
                msg = f"Relation {relation} is not homogeneous."
                raise ValueError(msg)

    def relation_degree(self, relation: Element) -> int:
        return relation.degree if relation.degree is not None else 0


def make_ring_presentation(
    generators: Sequence[PresentationGenerator],
    relations: Sequence[Element | str],
) -> RingPresentation:
    """Build a presentation, parsing relations given as expressions in the class names."""
    class_algebra = make_algebra((g.name, g.degree) for g in generators)
    parsed = tuple(
        relation if isinstance(relation, Element) else parse_element(class_algebra, relation)
        for relation in relations
    )
    return RingPresentation(tuple(generators), parsed, class_algebra)


@dataclass
class RingPresentationReport:
    """Outcome of checking a ring presentation degree by degree."""

    max_degree: int
    representatives: dict[str, Element]
    adjusted: list[str] = field(default_factory=list)
    issues: list[Issue] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.issues


class _Evaluation:
    """The algebra map from the class algebra to the model sending classes to cocycles."""

    def __init__(
        self,
        target: AlgebraSpec,
        class_algebra: AlgebraSpec,
        representatives: Mapping[str, Element],
    ) -> None:
        self._target = target
        self._representatives = [representatives[name] for name in class_algebra.names]
        self._cache: dict[Monomial, Element] = {}

    def monomial(
        self, monomial: Monomial, replace: int | None = None, by: Element | None = None
    ) -> Element:
        if replace is None and monomial in self._cache:
            return self._cache[monomial]
        value = self._target.one()
        for index, exponent in monomial.factors:
            factor = by if index == replace and by is not None else self._representatives[index]
            value = value * factor**exponent
        if replace is None:
            self._cache[monomial] = value
        return value

    def element(self, element: Element) -> Element:
        value = self._target.zero()
        for monomial, coefficient in element.terms.items():
            value = value + self.monomial(monomial) * coefficient
        return value


def verify_ring_presentation(
    model: DgaModel,
    presentation: RingPresentation,
    max_degree: int,
    progress: bool = False,
) -> RingPresentationReport:
    """Check that a presentation describes the cohomology ring up to a degree.

    For every degree n <= max_degree three facts are checked: products of the representatives
    span H^n, every relation of degree n evaluates to a coboundary, and the degree n piece of
    the free algebra on the classes modulo the relations has dimension betti(n).
    Generators marked adjustable may first have their representative rescaled and shifted by
    decomposable cocycles so that the relations become coboundaries; the chosen
    representatives are part of the report.

    Parameters
    ----------
    model : DgaModel
        The model whose cohomology is presented.
    presentation : RingPresentation
        Generators with representatives and relations.
    max_degree : int
        Highest degree to check.
    progress : bool, optional
        Show a progress bar, by default False.

    Returns
    -------
    RingPresentationReport
        The (possibly adjusted) representatives and all issues found.

    Raises
    ------
    NotACocycleError
        If a representative is not closed.
    """
    representatives: dict[str, Element] = {}
    for generator in presentation.generators:
        representative = generator.representative
        if representative.algebra != model.algebra:
            raise AlgebraMismatchError
        if not representative.is_homogeneous(generator.degree):
            msg = (
                f"Representative of {generator.name} is not homogeneous "
                f"of degree {generator.degree}."
            )
            raise ValueError(msg)
        if model.d(representative):
            raise NotACocycleError(f"{generator.name} = {representative}")
        representatives[generator.name] = representative

    report = RingPresentationReport(max_degree=max_degree, representatives=representatives)
    relations = [
        relation
        for relation in presentation.relations
        if presentation.relation_degree(relation) <= max_degree
    ]

    if any(generator.adjustable for generator in presentation.generators):
        _adjust_representatives(model, presentation, relations, report)
        if report.issues:
            return report

    evaluation = _Evaluation(model.algebra, presentation.class_algebra, report.representatives)
    for n in tqdm(range(max_degree + 1), desc="Ring presentation", disable=not progress):
        betti = cohomology_in_degree(model, n).betti
        report.issues.extend(_check_span(model, presentation, evaluation, n, betti))
        report.issues.extend(_check_relations(model, presentation, evaluation, relations, n))
        report.issues.extend(_check_quotient_dimension(presentation, relations, n, betti))
    return report


def _check_span(
    model: DgaModel,
    presentation: RingPresentation,
    evaluation: _Evaluation,
    n: int,
    betti: int,
) -> list[Issue]:
    span = _EchelonBasis()
    for position, monomial in enumerate(degree_basis(presentation.class_algebra, n)):
        span.insert(reduce_modulo_coboundaries(model, evaluation.monomial(monomial), n), position)
    if span.rank == betti:
        return []
    return [
        Issue(
            type=IssueType.GENERATORS_DO_NOT_SPAN,
            identifiers=IssueIdentifiers(degree=n, check="span"),
            reason=f"Products of the generators span {span.rank} of {betti} dimensions.",
        )
    ]


def _check_relations(
    model: DgaModel,
    presentation: RingPresentation,
    evaluation: _Evaluation,
    relations: list[Element],
    n: int,
) -> list[Issue]:
    issues = []
    for relation in relations:
        if presentation.relation_degree(relation) != n:
            continue
        bounded, _ = is_coboundary(model, evaluation.element(relation))
        if not bounded:
            issues.append(
                Issue(
                    type=IssueType.RELATION_NOT_COBOUNDARY,
                    identifiers=IssueIdentifiers(degree=n, relation=str(relation), check="relation"),
                    reason="The relation evaluated on the representatives is not a coboundary.",
                )
            )
    return issues


def _check_quotient_dimension(
    presentation: RingPresentation, relations: list[Element], n: int, betti: int
) -> list[Issue]:
    algebra = presentation.class_algebra
    positions = {monomial: i for i, monomial in enumerate(degree_basis(algebra, n))}
    ideal = _EchelonBasis()
    tag = 0
    for relation in relations:
        complement = n - presentation.relation_degree(relation)
        if complement < 0:
            continue
        for monomial in degree_basis(algebra, complement):
            product = Element(algebra, {monomial: Fraction(1)}) * relation
            ideal.insert({positions[m]: c for m, c in product.terms.items()}, tag)
            tag += 1
    quotient = len(positions) - ideal.rank
    if quotient == betti:
        return []
    return [
        Issue(
            type=IssueType.QUOTIENT_DIMENSION_MISMATCH,
            identifiers=IssueIdentifiers(degree=n, check="quotient"),
            reason=f"The presented ring has dimension {quotient}, the cohomology {betti}.",
        )
    ]


def _adjust_representatives(
    model: DgaModel,
    presentation: RingPresentation,
    relations: list[Element],
    report: RingPresentationReport,
) -> None:
    algebra = presentation.class_algebra
    adjustable = [g.index for g in algebra.generators if presentation.generators[g.index].adjustable]

    for relation in relations:
        for monomial in relation.terms:
            if sum(monomial.exponent(index) for index in adjustable) > 1:
                report.issues.append(
                    Issue(
                        type=IssueType.ADJUSTMENT_FAILED,
                        identifiers=IssueIdentifiers(relation=str(relation), check="adjustment"),
                        reason="The relation is not linear in the adjustable generators.",
                    )
                )
                return

    evaluation = _Evaluation(model.algebra, algebra, report.representatives)

    # rescaling columns come first, so shifts are only used when rescaling is not enough
    columns: list[tuple[int, Element]] = [
        (index, report.representatives[algebra.generators[index].name]) for index in adjustable
    ]
    scale_columns = len(columns)
    for index in adjustable:
        for monomial in degree_basis(algebra, algebra.generators[index].degree):
            is_decomposable = sum(exponent for _, exponent in monomial.factors) >= 2  # noqa: PLR2004
            if is_decomposable and all(monomial.exponent(other) == 0 for other in adjustable):
                columns.append((index, evaluation.monomial(monomial)))

    target: SparseVector = {}
    system = _EchelonBasis()
    column_vectors: list[SparseVector] = [{} for _ in columns]
    for position, relation in enumerate(relations):
        degree = presentation.relation_degree(relation)
        for key, value in reduce_modulo_coboundaries(
            model, evaluation.element(relation), degree
        ).items():
            target[(position, key)] = -value
        for column, (index, replacement) in enumerate(columns):
            value_element = model.algebra.zero()
            for monomial, coefficient in relation.terms.items():
                if monomial.exponent(index) == 1:
                    value_element = value_element + (
                        evaluation.monomial(monomial, replace=index, by=replacement) * coefficient
                    )
            for key, value in reduce_modulo_coboundaries(model, value_element, degree).items():
                column_vectors[column][(position, key)] = value
    for column, vector in enumerate(column_vectors):
        system.insert(vector, column)

    solution = system.solve(target)
    if solution is None:
        report.issues.append(
            Issue(
                type=IssueType.ADJUSTMENT_FAILED,
                identifiers=IssueIdentifiers(check="adjustment"),
                reason="No rescaling and decomposable shift makes all relations coboundaries.",
            )
        )
        return

    for column in range(scale_columns):
        index = columns[column][0]
        name = algebra.generators[index].name
        scale = 1 + solution.get(column, Fraction(0))
        if scale == 0:
            report.issues.append(
                Issue(
                    type=IssueType.ADJUSTMENT_FAILED,
                    identifiers=IssueIdentifiers(generator=name, check="adjustment"),
                    reason="The only solution rescales the representative to zero.",
                )
            )
            return
        adjusted = report.representatives[name] * scale
        for shift_column in range(scale_columns, len(columns)):
            shift_index, decomposable = columns[shift_column]
            if shift_index == index:
                adjusted = adjusted + decomposable * solution.get(shift_column, Fraction(0))
        if adjusted != report.representatives[name]:
            logger.info("Adjusted representative of %s to %s", name, adjusted)
            report.representatives[name] = adjusted
            report.adjusted.append(name)
