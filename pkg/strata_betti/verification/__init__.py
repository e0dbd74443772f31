# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .verify import (
    RING_PRESENTATIONS,
    VERIFICATION_CHECKS,
    CheckResult,
    expected_cp2_betti,
    expected_cp3_betti,
    verify,
    verify_conjecture_g,
    verify_conjecture_h,
    verify_cp2_ring,
    verify_cp3,
    verify_closed_forms,
    verify_mapspace_ring,
    verify_w1j23,
)

__all__ = [
    "RING_PRESENTATIONS",
    "VERIFICATION_CHECKS",
    "CheckResult",
    "expected_cp2_betti",
    "expected_cp3_betti",
    "verify",
    "verify_conjecture_g",
    "verify_conjecture_h",
    "verify_cp2_ring",
    "verify_cp3",
    "verify_closed_forms",
    "verify_mapspace_ring",
    "verify_w1j23",
]
