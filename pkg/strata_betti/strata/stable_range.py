# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from strata_betti.exceptions import RuleNotApplicableError


class StableRangeRule(Enum):
    """Known bounds on the number of ones after which H_i of w_{1^j lambda} is stable.

    SEGAL: j >= i/2, integral homology, any manifold.
    RW: j >= i, rational homology, manifolds of real dimension >= 3.
    W1J2: H_* of w_{1^j 2}(C^d) is stable in degrees <= j(2d-1)-1.
    """

    SEGAL = "segal"
    RW = "rw"
    W1J2 = "w1j2"


@dataclass(frozen=True)
class StableRangeBound:
    """What a rule certifies.

    ``min_j`` is the least j that makes the requested degree stable, ``max_stable_degree``
    the highest degree certified stable for the given j.
    """

    rule: StableRangeRule
    min_j: int | None = None
    max_stable_degree: int | None = None

    def describe(self) -> str:
        parts = []
        if self.min_j is not None:
            parts.append(f"j >= {self.min_j}")
        if self.max_stable_degree is not None:
            parts.append(f"stable for degrees <= {self.max_stable_degree}")
        return f"{self.rule.value}: " + ", ".join(parts)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def stable_range_bound(
    rule: StableRangeRule,
    degree: int | None = None,
    d: int | None = None,
    j: int | None = None,
) -> StableRangeBound:
    """Evaluate a stable range rule.

    Parameters
    ----------
    rule : StableRangeRule
        The rule.
    degree : int | None, optional
        Requested homology degree i; yields ``min_j``.
    d : int | None, optional
        Complex dimension of C^d; needed by RW (real dimension 2d) and W1J2.
    j : int | None, optional
        Number of ones; with W1J2 yields ``max_stable_degree``.

    Raises
    ------
    RuleNotApplicableError
        If the rule's hypotheses fail (RW needs 2d >= 3).
    ValueError
        If a parameter the rule needs is missing.
    """
    if rule is StableRangeRule.SEGAL:
        if degree is None:
            msg = "SEGAL needs the homology degree."
            raise ValueError(msg)
        return StableRangeBound(rule, min_j=_ceil_div(degree, 2))

    if d is None:
        msg = f"{rule.name} needs d."
        raise ValueError(msg)

    if rule is StableRangeRule.RW:
        if 2 * d < 3:  # noqa: PLR2004
            msg = f"RW needs real dimension >= 3, got {2 * d}."
            raise RuleNotApplicableError(msg)
        if degree is None:
            msg = "RW needs the homology degree."
            raise ValueError(msg)
        return StableRangeBound(rule, min_j=degree)

    if degree is None and j is None:
        msg = "W1J2 needs the homology degree or j."
        raise ValueError(msg)
    unit = 2 * d - 1
    return StableRangeBound(
        rule,
        min_j=_ceil_div(degree + 1, unit) if degree is not None else None,
        max_stable_degree=j * unit - 1 if j is not None else None,
    )
