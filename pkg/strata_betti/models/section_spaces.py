# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Series models of the section spaces that compute stable homology of strata in C^d.

The compactly supported section space of C^d minus p points splits rationally as the
component of the iterated loop space (an odd sphere, Lambda(b_{2d-1})) times one loop space of
S^2d per puncture (Q[a_{4d-2}] tensor Lambda(a_{2d-1})). The Kunneth theorem turns the
splitting into a product of series.
"""

from __future__ import annotations

from strata_betti.algebra import AlgebraSpec, make_algebra

from .poincare_series import PoincareSeries, free_cga_series, series_product


def _check_d(d: int) -> None:
    if d < 1:
        msg = f"d must be >= 1, got {d}."
        raise ValueError(msg)


def loop_sphere_series(d: int, max_degree: int) -> PoincareSeries:
    """Return the series of the loop space of S^2d, which is 1/(1 - t^(2d-1))."""
    _check_d(d)
    algebra = make_algebra([(f"a{2 * d - 1}", 2 * d - 1), (f"a{4 * d - 2}", 4 * d - 2)])
    return free_cga_series(algebra, max_degree)


def iterated_loop_component_series(d: int, max_degree: int) -> PoincareSeries:
    """Return the series of one component of the 2d-fold loop space of S^2d, Lambda(b_{2d-1})."""
    _check_d(d)
    return free_cga_series(make_algebra([(f"b{2 * d - 1}", 2 * d - 1)]), max_degree)


def two_puncture_correction_series(d: int, max_degree: int) -> PoincareSeries:
    """Return the series of Lambda(c_{2d-1}), the extra exterior class of the {2, 3} tail."""
    _check_d(d)
    return free_cga_series(make_algebra([(f"c{2 * d - 1}", 2 * d - 1)]), max_degree)


def section_space_algebra(d: int, punctures: int) -> AlgebraSpec:
    """Return the free algebra whose series is the section space series.

    Generators are b_{2d-1} followed by a_{2d-1}, a_{4d-2} for every puncture; with more than
    one puncture their names carry the puncture number.
    """
    _check_d(d)
    if punctures < 0:
        msg = f"punctures must be >= 0, got {punctures}."
        raise ValueError(msg)
    generators = [(f"b{2 * d - 1}", 2 * d - 1)]
    for puncture in range(1, punctures + 1):
        suffix = "" if punctures == 1 else f"_{puncture}"
        generators.append((f"a{2 * d - 1}{suffix}", 2 * d - 1))
        generators.append((f"a{4 * d - 2}{suffix}", 4 * d - 2))
    return make_algebra(generators)


def section_space_series(d: int, punctures: int, max_degree: int) -> PoincareSeries:
    """Return the series of compactly supported sections over C^d minus some points.

    Parameters
    ----------
    d : int
        Complex dimension, >= 1.
    punctures : int
        Number of removed points, >= 0.
    max_degree : int
        Truncation bound.

    Returns
    -------
    PoincareSeries
        Lambda(b_{2d-1}) times ``punctures`` copies of the loop space series.
    """
    _check_d(d)
    if punctures < 0:
        msg = f"punctures must be >= 0, got {punctures}."
        raise ValueError(msg)
    series = iterated_loop_component_series(d, max_degree)
    for _ in range(punctures):
        series = series_product(series, loop_sphere_series(d, max_degree), max_degree)
    return series
