# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""The free model of the degree l mapping space from CP^m to S^2m.

The model is the free graded-commutative algebra on even classes b2, b4, ..., b(2m-2) and
odd classes v(2m+1), v(2m+3), ..., v(4m-1) with

    d(b2i) = 0,
    d(v(4m-2i-1)) = sum_{r+s=2m-i} b2r*b2s - (sum_{r+s=m} b2r*b2s) * b(2m-2i)   for 0 < i < m,
    d(v(4m-1)) = 1/4 * (sum_{r+s=m} b2r*b2s)^2.

All sums run over ordered pairs with 1 <= r, s <= m-1; terms with b0 or b2m do not exist.
This is the only reading that gives d(v5) = -b2^3 for m = 2. The model does not depend on the
degree l as long as l is nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from strata_betti.algebra import AlgebraSpec, Element, make_algebra
from strata_betti.cohomology import DgaModel, make_derivation


def _pair_sum(algebra: AlgebraSpec, m: int, total: int) -> Element:
    result = algebra.zero()
    for r in range(1, m):
        s = total - r
        if 1 <= s <= m - 1:
            result = result + algebra.generator(f"b{2 * r}") * algebra.generator(f"b{2 * s}")
    return result


@lru_cache(maxsize=16)
def moller_raussen(m: int) -> DgaModel:
    """Build the model for maps CP^m -> S^2m.

    Parameters
    ----------
    m : int
        Complex dimension of the source, >= 1. For m = 1 the model is the exterior algebra
        on v3 with zero differential.

    Returns
    -------
    DgaModel
        The model with generators b2..b(2m-2), v(2m+1)..v(4m-1) in this order.
    """
    if m < 1:
        msg = f"m must be >= 1, got {m}."
        raise ValueError(msg)

    even = [(f"b{2 * i}", 2 * i) for i in range(1, m)]
    odd = [(f"v{k}", k) for k in range(2 * m + 1, 4 * m, 2)]
    algebra = make_algebra(even + odd)

    middle = _pair_sum(algebra, m, m)
    images: dict[str, Element] = {}
    for i in range(1, m):
        images[f"v{4 * m - 2 * i - 1}"] = (
            _pair_sum(algebra, m, 2 * m - i) - middle * algebra.generator(f"b{2 * (m - i)}")
        )
    images[f"v{4 * m - 1}"] = middle * middle * Fraction(1, 4)
    return DgaModel(algebra, make_derivation(algebra, images), label=f"MR({m})")
