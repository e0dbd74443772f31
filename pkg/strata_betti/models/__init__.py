# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .moller_raussen import moller_raussen
from .poincare_series import PoincareSeries, free_cga_series, periodicity_check, series_product
from .section_spaces import (
    iterated_loop_component_series,
    loop_sphere_series,
    section_space_algebra,
    section_space_series,
    two_puncture_correction_series,
)

__all__ = [
    "PoincareSeries",
    "free_cga_series",
    "iterated_loop_component_series",
    "loop_sphere_series",
    "moller_raussen",
    "periodicity_check",
    "section_space_algebra",
    "section_space_series",
    "series_product",
    "two_puncture_correction_series",
]
