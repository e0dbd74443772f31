# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from strata_betti._util import _warning
from strata_betti.exceptions import RuleNotApplicableError
from strata_betti.gerstenhaber import Partition, stable_stratum_betti
from strata_betti.issue import Issue, IssueIdentifiers, IssueType
from strata_betti.models import section_spaces
from strata_betti.models.poincare_series import series_product

from .formulas import formula_corrected, published_w1j23
from .stable_range import StableRangeRule, stable_range_bound

logger = logging.getLogger(__name__)

GERSTENHABER = "gerstenhaber"
SERIES = "series"
CLOSED_FORM = "closed_form"
PUBLISHED = "published"

_TAIL_2 = Partition((2,))
_TAIL_23 = Partition((2, 3))


@dataclass(frozen=True)
class StableBettiRow:
    """One degree of a stable table with the value of every engine."""

    degree: int
    dim: int
    engines: Mapping[str, int]
    note: str | None = None


@dataclass
class StableBettiResult:
    """A stable Betti table together with where its values come from."""

    tail: Partition
    d: int
    max_degree: int
    j: int
    engines: list[str]
    rows: list[StableBettiRow] = field(default_factory=list)
    issues: list[Issue] = field(default_factory=list)

    @property
    def dims(self) -> list[int]:
        return [row.dim for row in self.rows]

    @property
    def agreed(self) -> bool:
        """True unless two computing engines disagree somewhere."""
        return not any(issue.type == IssueType.ENGINE_DISAGREEMENT for issue in self.issues)

    @property
    def provenance(self) -> str:
        computing = [name for name in self.engines if name != PUBLISHED]
        if len(computing) == 1:
            text = f"{computing[0]} only"
        elif self.agreed:
            text = f"{len(computing)} engines agree"
        else:
            degrees = sorted(
                {
                    issue.identifiers.degree
                    for issue in self.issues
                    if issue.type == IssueType.ENGINE_DISAGREEMENT
                }
            )
            text = f"engines disagree in degrees {', '.join(map(str, degrees))}"
        published = [
            str(issue.identifiers.degree)
            for issue in self.issues
            if issue.type == IssueType.PUBLISHED_DISCREPANCY
        ]
        if published:
            text += f"; published table differs in degrees {', '.join(published)}"
        return text


def _engine_tables(tail: Partition, d: int, max_degree: int, j: int) -> dict[str, list[int]]:
    degrees = range(max_degree + 1)
    tables: dict[str, list[int]] = {}
    if tail == _TAIL_2:
        tables[CLOSED_FORM] = [formula_corrected(d, i) for i in degrees]
        tables[SERIES] = list(section_spaces.section_space_series(d, 1, max_degree).coefficients)
    elif not tail.parts:
        tables[SERIES] = list(
            section_spaces.iterated_loop_component_series(d, max_degree).coefficients
        )
    elif tail == _TAIL_23:
        series = series_product(
            section_spaces.section_space_series(d, 2, max_degree),
            section_spaces.two_puncture_correction_series(d, max_degree),
            max_degree,
        )
        tables[SERIES] = list(series.coefficients)
    tables[GERSTENHABER] = [dim for _, dim in stable_stratum_betti(tail, d, max_degree, j)]
    if tail == _TAIL_23:
        tables[PUBLISHED] = [published_w1j23(d, i) for i in degrees]
    return tables


def stable_j(tail: Partition, d: int, max_degree: int, j: int | None = None) -> int:
    """Return the number of ones at which the stable table of ``tail`` is enumerated.

    Without a j this is max_degree + 2, which is stable for every tail. A given j is checked:
    for the tail {2} against the W1J2 range, for every other tail against max_degree + 2.

    Raises
    ------
    RuleNotApplicableError
        If no rule certifies degrees up to max_degree as stable at the given j.
    """
    tail = tail.without_ones()
    default = max_degree + 2
    if tail != _TAIL_2:
        if j is not None and j < default:
            msg = f"No stable range rule covers w_{{1^{j} {tail}}} up to degree {max_degree}."
            raise RuleNotApplicableError(msg)
        return default if j is None else j

    chosen = default if j is None else j
    bound = stable_range_bound(StableRangeRule.W1J2, degree=max_degree, d=d, j=chosen)
    if bound.max_stable_degree is None or bound.max_stable_degree < max_degree:
        msg = f"w_{{1^{chosen} 2}} is not stable up to degree {max_degree}: {bound.describe()}"
        raise RuleNotApplicableError(msg)
    logger.debug("enumerating at j=%d, %s", chosen, bound.describe())
    return chosen


def stable_betti(
    tail: Partition, d: int, max_degree: int, j: int | None = None
) -> StableBettiResult:
    """Compute the stable table of w_{1^j tail}(C^d) with every engine that applies.

    The Gerstenhaber enumeration always runs, at the j chosen by ``stable_j``. The tail {2}
    is also computed from the corrected closed form and from the section space series with
    one puncture, the empty tail from the series of the iterated loop space component, and the
    tail {2, 3} from the two puncture series times Lambda(c_{2d-1}); for {2, 3} the published
    table is compared as well. Ones in the tail do not change the stable table.

    Parameters
    ----------
    tail : Partition
        The partition lambda.
    d : int
        Complex dimension, >= 1.
    max_degree : int
        Highest degree.
    j : int | None, optional
        Number of ones to enumerate at; defaults to max_degree + 2.

    Returns
    -------
    StableBettiResult
        Rows carry the value of every engine and ``dim`` is the Gerstenhaber value.
        Disagreement between computing engines is an EngineDisagreement issue, disagreement
        with the published table a PublishedDiscrepancy issue.
    """
    if d < 1:
        msg = f"d must be >= 1, got {d}."
        raise ValueError(msg)
    tail = tail.without_ones()
    j = stable_j(tail, d, max_degree, j)
    tables = _engine_tables(tail, d, max_degree, j)
    result = StableBettiResult(tail=tail, d=d, max_degree=max_degree, j=j, engines=list(tables))

    for degree in range(max_degree + 1):
        values = {name: table[degree] for name, table in tables.items()}
        dim = values[GERSTENHABER]
        note = None
        computed = {name: value for name, value in values.items() if name != PUBLISHED}
        if len(set(computed.values())) > 1:
            result.issues.append(
                Issue(
                    type=IssueType.ENGINE_DISAGREEMENT,
                    identifiers=IssueIdentifiers(degree=degree, d=d, check="stable-betti"),
                    reason=_render_values(computed),
                )
            )
            note = "engines disagree"
        if PUBLISHED in values and values[PUBLISHED] != dim:
            reason = f"computed {dim}, published table gives {values[PUBLISHED]}"
            result.issues.append(
                Issue(
                    type=IssueType.PUBLISHED_DISCREPANCY,
                    identifiers=IssueIdentifiers(
                        degree=degree, d=d, engine=PUBLISHED, check="stable-betti"
                    ),
                    reason=reason,
                )
            )
            _warning(f"w_{{1^j {tail}}}, d={d}, degree {degree}: {reason}")
            note = reason if note is None else f"{note}; {reason}"
        result.rows.append(StableBettiRow(degree=degree, dim=dim, engines=values, note=note))

    logger.info("stable table of tail '%s', d=%d: %s", tail, d, result.provenance)
    return result


def _render_values(values: Mapping[str, int]) -> str:
    return ", ".join(f"{name}={value}" for name, value in values.items())
