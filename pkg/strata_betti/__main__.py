# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
import sys
from collections.abc import Sequence

import click

from strata_betti._util import _WarningsLogger
from strata_betti.cohomology import betti_table
from strata_betti.exceptions import PartitionSyntaxError
from strata_betti.gerstenhaber import Partition, stratum_betti_table
from strata_betti.issue import IssueType, failures
from strata_betti.models import moller_raussen
from strata_betti.output import OutputFormat, OutputRow, OutputTable, render_tables
from strata_betti.strata import compare_formulas, parse_partition, stable_betti
from strata_betti.verification import (
    RING_PRESENTATIONS,
    VERIFICATION_CHECKS,
    CheckResult,
    verify,
    verify_mapspace_ring,
)

DEFAULT_MAX_DEGREE = 30

_format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(OutputFormat.names()),
    default=OutputFormat.TEXT.value,
    show_default=True,
    help="Output format of the tables.",
)
_max_degree_option = click.option(
    "--max-degree",
    type=click.IntRange(min=0),
    default=DEFAULT_MAX_DEGREE,
    show_default=True,
    help="Highest degree to compute.",
)
_progress_option = click.option(
    "--progress", is_flag=True, help="Show progress bars on standard error."
)


def _echo_warnings(warnings: list[str]) -> None:
    for warning in warnings:
        click.echo(f"warning: {warning}", err=True)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log what the engines do.")
def cli(verbose: bool) -> None:
    """strata-betti - Betti tables of partition strata and mapping spaces."""
    if verbose:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")


@cli.group()
def betti() -> None:
    """Compute a Betti table."""


@betti.command(name="mapspace")
@click.option(
    "--m",
    "m",
    type=click.IntRange(min=1),
    required=True,
    help="Complex dimension of CP^m; maps go to S^2m.",
)
@_max_degree_option
@_format_option
@click.option(
    "--ring",
    is_flag=True,
    help=f"Also verify the ring presentation (m in {sorted(RING_PRESENTATIONS)}).",
)
@_progress_option
@click.pass_context
def mapspace_command(  # noqa: PLR0913
    ctx: click.Context,
    m: int,
    max_degree: int,
    output_format: str,
    ring: bool,
    progress: bool,
) -> None:
    """Rational cohomology of the space of degree l maps CP^m -> S^2m, l != 0."""
    if ring and m not in RING_PRESENTATIONS:
        msg = f"--ring is only available for --m in {sorted(RING_PRESENTATIONS)}, got {m}."
        raise click.UsageError(msg, ctx=ctx)

    model = moller_raussen(m)
    table = OutputTable(title=f"H^*(map_l(CP^{m}, S^{2 * m}); Q) via {model.label}", m=m)
    for degree, dim in betti_table(model, max_degree, progress=progress):
        table.rows.append(OutputRow(degree=degree, dim=dim))
    tables = [table]

    passed = True
    if ring:
        result = verify_mapspace_ring(m, progress=progress)
        tables.extend(result.tables)
        passed = result.passed

    click.echo(render_tables(tables, output_format), nl=False)
    if not passed:
        ctx.exit(1)


@betti.command(name="stratum")
@click.option(
    "--lambda",
    "partition_text",
    required=True,
    help="Partition, e.g. \"1^5 2\" (quote it: tokens are separated by spaces).",
)
@click.option(
    "--d", "d", type=click.IntRange(min=1), required=True, help="Complex dimension of C^d."
)
@click.option(
    "--stable",
    is_flag=True,
    help="Compute the stable table of 1^j lambda; j = max-degree + 2 is echoed.",
)
@click.option(
    "--j",
    "j",
    type=click.IntRange(min=0),
    default=None,
    help="Set the number of ones in lambda to J.",
)
@_max_degree_option
@_format_option
@click.pass_context
def stratum_command(  # noqa: PLR0913
    ctx: click.Context,
    partition_text: str,
    d: int,
    stable: bool,
    j: int | None,
    max_degree: int,
    output_format: str,
) -> None:
    """Rational homology of the stratum w_lambda(C^d) of the symmetric product."""
    if stable and j is not None:
        msg = "--stable and --j are mutually exclusive."
        raise click.UsageError(msg, ctx=ctx)
    try:
        partition = parse_partition(partition_text)
    except PartitionSyntaxError as e:
        raise click.BadParameter(str(e), ctx=ctx, param_hint="'--lambda'") from e

    if stable:
        with _WarningsLogger() as captured:
            result = stable_betti(partition, d, max_degree)
        table = OutputTable(
            title=f"Stable H_*(w_{{{_with_ones_label(result.tail)}}}(C^{d}); Q)",
            d=d,
            j=result.j,
        )
        for row in result.rows:
            table.rows.append(
                OutputRow(degree=row.degree, dim=row.dim, engines=dict(row.engines), note=row.note)
            )
        table.notes.append(f"provenance: {result.provenance}")
        table.discrepancies = list(result.issues)
        click.echo(table.render(output_format), nl=False)
        _echo_warnings(captured.warnings)
        if not result.agreed:
            ctx.exit(1)
        return

    if j is not None:
        partition = partition.without_ones().with_ones(j)
    if not partition.parts:
        msg = "The partition must not be empty."
        raise click.BadParameter(msg, ctx=ctx, param_hint="'--lambda'")

    table = OutputTable(title=f"H_*(w_{{{partition}}}(C^{d}); Q)", d=d, j=j)
    for degree, dim in stratum_betti_table(partition, d, max_degree):
        table.rows.append(OutputRow(degree=degree, dim=dim))
    click.echo(table.render(output_format), nl=False)


def _with_ones_label(tail: Partition) -> str:
    return f"1^j {tail}" if tail.parts else "1^j"


@cli.command(name="compare-formulas")
@click.option(
    "--d", "d", type=click.IntRange(min=1), required=True, help="Complex dimension of C^d."
)
@_max_degree_option
@_format_option
def compare_formulas_command(d: int, max_degree: int, output_format: str) -> None:
    """Tabulate the predicted and the corrected closed form for w_{1^j 2}(C^d)."""
    comparison = compare_formulas(d, max_degree)
    table = OutputTable(title=f"Predicted and corrected H_*(w_{{1^j 2}}(C^{d}); Q)", d=d)
    for degree, predicted, corrected in comparison.rows:
        note = "first disagreement" if degree == comparison.first_disagreement else None
        table.rows.append(
            OutputRow(
                degree=degree,
                dim=corrected,
                engines={"predicted": predicted, "corrected": corrected},
                note=note,
            )
        )
    table.notes.append(f"first disagreement at degree {comparison.first_disagreement}")
    click.echo(table.render(output_format), nl=False)


@cli.command(name="verify")
@click.argument("check", type=click.Choice([*VERIFICATION_CHECKS, "all"]))
@_progress_option
@click.pass_context
def verify_command(ctx: click.Context, check: str, progress: bool) -> None:
    """Check a named result against the engines and print PASS or FAIL."""
    checks = list(VERIFICATION_CHECKS) if check == "all" else [check]
    passed = True
    for name in checks:
        with _WarningsLogger() as captured:
            (result,) = verify([name], progress=progress)
        _print_check(result)
        _echo_warnings(captured.warnings)
        passed = passed and result.passed
    if len(checks) > 1:
        click.echo(f"all: {'PASS' if passed else 'FAIL'}")
    if not passed:
        ctx.exit(1)


def _print_check(result: CheckResult) -> None:
    for table in result.tables:
        # discrepancies are echoed from the captured warnings
        table.discrepancies = []
        click.echo(table.to_text())
    for issue in failures(result.issues):
        click.echo(f"  {issue}")
    discrepancies = [i for i in result.issues if i.type == IssueType.PUBLISHED_DISCREPANCY]
    if discrepancies:
        click.echo(f"  {len(discrepancies)} documented discrepancy(ies) with printed tables")
    click.echo(f"{result.check}: {result.verdict}")


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code instead of exiting.

    0 on success, 1 when a verification fails or engines disagree, 2 on a usage error.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        rv = cli.main(args, prog_name="strata-betti", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
