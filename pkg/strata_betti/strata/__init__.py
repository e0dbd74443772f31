# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .formulas import (
    ClosedFormRule,
    ClosedFormTable,
    FormulaComparison,
    compare_formulas,
    first_disagreement,
    formula_corrected,
    formula_vw,
    published_w1j23,
)
from .parse_partition import parse_partition, render_partition
from .stable_betti import StableBettiResult, StableBettiRow, stable_betti, stable_j
from .stable_range import StableRangeBound, StableRangeRule, stable_range_bound

__all__ = [
    "ClosedFormRule",
    "ClosedFormTable",
    "FormulaComparison",
    "StableBettiResult",
    "StableBettiRow",
    "StableRangeBound",
    "StableRangeRule",
    "compare_formulas",
    "first_disagreement",
    "formula_corrected",
    "formula_vw",
    "parse_partition",
    "published_w1j23",
    "render_partition",
    "stable_betti",
    "stable_j",
    "stable_range_bound",
]
