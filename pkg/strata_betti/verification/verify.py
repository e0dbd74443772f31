# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Checks of the named results against the engines.

Each check returns a ``CheckResult``: the tables it compared and the issues it found. A check
passes when none of its issues is a failure; a documented disagreement with a printed table
(``PublishedDiscrepancy``) is reported but does not fail the check.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from tqdm import tqdm

from strata_betti.algebra import Element, parse_element
from strata_betti.cohomology import betti_table, cohomology_in_degree, verify_ring_presentation
from strata_betti.gerstenhaber import Partition
from strata_betti.issue import Issue, IssueIdentifiers, IssueType, failures
from strata_betti.models import PoincareSeries, moller_raussen, periodicity_check
from strata_betti.output import OutputRow, OutputTable
from strata_betti.presentations import load_presentation
from strata_betti.strata import StableBettiResult, compare_formulas, stable_betti

logger = logging.getLogger(__name__)

CP2_DEGREES = frozenset({0, 2, 4, 7, 9, 11})
CP3_ZERO_DEGREES = frozenset({1, 3, 5, 7, 9})
CP3_ONE_DEGREES = frozenset({0, 2, 10, 11, 12, 14, 16, 18, 20, 22})
CP3_THREE_DEGREES = frozenset({15, 17, 19})


@dataclass
class CheckResult:
    """Tables and issues of one verification check."""

    check: str
    tables: list[OutputTable] = field(default_factory=list)
    issues: list[Issue] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not failures(self.issues)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def expected_cp2_betti(i: int) -> int:
    """Dimension of H^i(map_l(CP^2, S^4); Q): 1 for i in {0, 2, 4, 7, 9, 11}, else 0."""
    return 1 if i in CP2_DEGREES else 0


def expected_cp3_betti(i: int) -> int:
    """Dimension of H^i(map_l(CP^3, S^6); Q) for i <= 30, by the piecewise rule."""
    if i in CP3_ZERO_DEGREES:
        return 0
    if i in CP3_ONE_DEGREES:
        return 1
    if i in CP3_THREE_DEGREES:
        return 3
    return 2


def _mapspace_comparison(
    check: str,
    m: int,
    expected: Callable[[int], int],
    max_degree: int,
    progress: bool,
) -> tuple[OutputTable, list[Issue]]:
    model = moller_raussen(m)
    table = OutputTable(title=f"H^*(map_l(CP^{m}, S^{2 * m}); Q) via {model.label}", m=m)
    issues = []
    for degree, dim in betti_table(model, max_degree, progress=progress):
        wanted = expected(degree)
        note = None
        if dim != wanted:
            note = "mismatch"
            issues.append(
                Issue(
                    type=IssueType.BETTI_MISMATCH,
                    identifiers=IssueIdentifiers(degree=degree, m=m, check=check),
                    reason=f"computed {dim}, expected {wanted}",
                )
            )
        table.rows.append(
            OutputRow(degree=degree, dim=dim, engines={"cdga": dim, "expected": wanted}, note=note)
        )
    return table, issues


def verify_conjecture_g(max_degree: int = 40, progress: bool = False) -> CheckResult:
    """Compare the Betti table of the CP^2 model with its closed description."""
    table, issues = _mapspace_comparison(
        "conjecture-g", 2, expected_cp2_betti, max_degree, progress
    )
    return CheckResult("conjecture-g", [table], issues)


def _ring_check(
    check: str, name: str, m: int, progress: bool
) -> tuple[OutputTable, list[Issue]]:
    loaded = load_presentation(name)
    report = verify_ring_presentation(
        loaded.model, loaded.presentation, loaded.max_degree, progress=progress
    )
    presentation = loaded.presentation
    table = OutputTable(title=f"Ring presentation: {loaded.description}", m=m)
    for n in range(report.max_degree + 1):
        dim = cohomology_in_degree(loaded.model, n).betti
        table.rows.append(OutputRow(degree=n, dim=dim))
    for generator in presentation.generators:
        line = f"{generator.name} = {report.representatives[generator.name]}"
        if generator.name in report.adjusted:
            line += "  (adjusted by the representative search)"
        table.notes.append(line)
    relations = ", ".join(str(relation) for relation in presentation.relations)
    verdict = "verified" if report.passed else "NOT verified"
    table.notes.append(f"relations {relations}: {verdict} up to degree {report.max_degree}")
    for issue in report.issues:
        issue.identifiers.m = m
        issue.identifiers.check = check
    return table, report.issues


RING_PRESENTATIONS = {2: "cp2", 3: "cp3"}


def verify_mapspace_ring(m: int, progress: bool = False) -> CheckResult:
    """Check the built-in ring presentation of H^*(map_l(CP^m, S^2m); Q).

    Raises
    ------
    ValueError
        If there is no built-in presentation for m.
    """
    if m not in RING_PRESENTATIONS:
        msg = (
            f"No ring presentation for m={m}. "
            f"Available for m in {{{', '.join(map(str, RING_PRESENTATIONS))}}}."
        )
        raise ValueError(msg)
    check = f"{RING_PRESENTATIONS[m]}-ring"
    table, issues = _ring_check(check, RING_PRESENTATIONS[m], m, progress)
    return CheckResult(check, [table], issues)


def verify_cp2_ring(progress: bool = False) -> CheckResult:
    """Check the ring presentation Q[b2]/(b2^3) (x) Lambda(c7) with c7 = b2*v5 + 4*v7."""
    return verify_mapspace_ring(2, progress=progress)


def verify_cp3(max_degree: int = 30, progress: bool = False) -> CheckResult:
    """Check the CP^3 Betti table, the H^11 generator and the ring presentation."""
    table, issues = _mapspace_comparison("cp3", 3, expected_cp3_betti, max_degree, progress)

    model = moller_raussen(3)
    h11 = cohomology_in_degree(model, 11)
    expected = parse_element(model.algebra, "b2*v9 + 2*v11")
    if h11.betti == 1 and _proportional(h11.representatives[0], expected):
        table.notes.append(f"H^11 is spanned by {expected}")
    else:
        issues.append(
            Issue(
                type=IssueType.BETTI_MISMATCH,
                identifiers=IssueIdentifiers(degree=11, m=3, check="cp3"),
                reason=f"H^11 is not spanned by {expected}",
            )
        )

    ring_table, ring_issues = _ring_check("cp3", "cp3", 3, progress)
    return CheckResult("cp3", [table, ring_table], issues + ring_issues)


def _proportional(element: Element, reference: Element) -> bool:
    monomial, coefficient = reference.sorted_terms()[0]
    scale = element.coefficient(monomial) / coefficient
    return scale != 0 and element == reference * scale


def _stable_table(result: StableBettiResult, title: str) -> OutputTable:
    table = OutputTable(title=title, d=result.d, j=result.j)
    for row in result.rows:
        table.rows.append(
            OutputRow(degree=row.degree, dim=row.dim, engines=dict(row.engines), note=row.note)
        )
    table.notes.append(f"provenance: {result.provenance}")
    table.discrepancies = [
        issue for issue in result.issues if issue.type == IssueType.PUBLISHED_DISCREPANCY
    ]
    return table


def verify_conjecture_h(
    ds: Iterable[int] = (1, 2, 3), max_degree: int = 30, progress: bool = False
) -> CheckResult:
    """Check that the engines agree on w_{1^j 2}(C^d) and that the table is periodic.

    The period is 2d-1 from degree 1 on.
    """
    result = CheckResult("conjecture-h")
    tail = Partition((2,))
    for d in tqdm(list(ds), desc=result.check, disable=not progress):
        stable = stable_betti(tail, d, max_degree)
        table = _stable_table(stable, f"Stable H_*(w_{{1^j 2}}(C^{d}); Q)")
        result.tables.append(table)
        result.issues.extend(stable.issues)

        period = 2 * d - 1
        for engine in stable.engines:
            series = PoincareSeries(tuple(row.engines[engine] for row in stable.rows))
            if not periodicity_check(series, 1, period):
                result.issues.append(
                    Issue(
                        type=IssueType.PERIODICITY_FAILURE,
                        identifiers=IssueIdentifiers(d=d, engine=engine, check="conjecture-h"),
                        reason=f"not periodic with period {period} from degree 1",
                    )
                )
    return result


def verify_closed_forms(
    ds: Iterable[int] = (1, 2, 3, 4, 5), max_degree: int = 30, progress: bool = False
) -> CheckResult:
    """Check where the predicted closed form first fails and that the corrected one holds.

    The first disagreement must be at 4d-2 and the corrected table must equal the stable
    table computed by the engines.
    """
    result = CheckResult("formula-150")
    tail = Partition((2,))
    for d in tqdm(list(ds), desc=result.check, disable=not progress):
        comparison = compare_formulas(d, max_degree)
        stable = stable_betti(tail, d, max_degree)
        table = OutputTable(title=f"Predicted and corrected H_*(w_{{1^j 2}}(C^{d}); Q)", d=d)
        for (degree, predicted, corrected), row in zip(comparison.rows, stable.rows, strict=True):
            note = "first disagreement" if degree == comparison.first_disagreement else None
            table.rows.append(
                OutputRow(
                    degree=degree,
                    dim=corrected,
                    engines={"predicted": predicted, "corrected": corrected, "engines": row.dim},
                    note=note,
                )
            )
            if corrected != row.dim:
                result.issues.append(
                    Issue(
                        type=IssueType.FORMULA_DISAGREEMENT,
                        identifiers=IssueIdentifiers(degree=degree, d=d, check="formula-150"),
                        reason=f"corrected form gives {corrected}, the engines {row.dim}",
                    )
                )
        table.notes.append(f"first disagreement at degree {comparison.first_disagreement}")
        result.tables.append(table)
        result.issues.extend(
            issue for issue in stable.issues if issue.type == IssueType.ENGINE_DISAGREEMENT
        )
        if comparison.first_disagreement != 4 * d - 2:
            result.issues.append(
                Issue(
                    type=IssueType.FORMULA_DISAGREEMENT,
                    identifiers=IssueIdentifiers(d=d, check="formula-150"),
                    reason=(
                        f"first disagreement at {comparison.first_disagreement}, "
                        f"expected {4 * d - 2}"
                    ),
                )
            )
    return result


def verify_w1j23(
    ds: Iterable[int] = (1, 2), ks: Iterable[int] = range(2, 9), progress: bool = False
) -> CheckResult:
    """Check the stable table of w_{1^j 2 3}(C^d): 4k in degree k(2d-1) for k > 1.

    The value in degree 2d-1 is reported together with the discrepancy against the printed
    table, which has 0 there.
    """
    result = CheckResult("w1j23")
    ks = list(ks)
    tail = Partition((2, 3))
    for d in tqdm(list(ds), desc=result.check, disable=not progress):
        unit = 2 * d - 1
        stable = stable_betti(tail, d, max(ks, default=1) * unit)
        result.tables.append(_stable_table(stable, f"Stable H_*(w_{{1^j 2 3}}(C^{d}); Q)"))
        result.issues.extend(stable.issues)
        for k in ks:
            dim = stable.rows[k * unit].dim
            if dim != 4 * k:
                result.issues.append(
                    Issue(
                        type=IssueType.BETTI_MISMATCH,
                        identifiers=IssueIdentifiers(degree=k * unit, d=d, check="w1j23"),
                        reason=f"computed {dim}, expected {4 * k}",
                    )
                )
    return result


VERIFICATION_CHECKS: dict[str, Callable[..., CheckResult]] = {
    "conjecture-g": verify_conjecture_g,
    "conjecture-h": verify_conjecture_h,
    "cp2-ring": verify_cp2_ring,
    "cp3": verify_cp3,
    "formula-150": verify_closed_forms,
    "w1j23": verify_w1j23,
}


def verify(checks: Iterable[str] | None = None, progress: bool = False) -> list[CheckResult]:
    """Run verification checks.

    Parameters
    ----------
    checks : Iterable[str] | None, optional
        Names from VERIFICATION_CHECKS; all of them if None.
    progress : bool, optional
        Show progress bars, by default False.

    Returns
    -------
    list[CheckResult]
        One result per check, in the order requested.
    """
    names = list(VERIFICATION_CHECKS) if checks is None else list(checks)
    for name in names:
        if name not in VERIFICATION_CHECKS:
            msg = f"Unknown check '{name}'. Supported checks: {', '.join(VERIFICATION_CHECKS)}"
            raise ValueError(msg)

    results = []
    for name in names:
        result = VERIFICATION_CHECKS[name](progress=progress)
        logger.info("%s: %s", name, result.verdict)
        results.append(result)
    return results
