# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .basic_products import BasicProduct, basic_products
from .lyndon import is_lyndon, lyndon_words, standard_bracketing, standard_factorization
from .partition import Partition
from .stratum_basis import (
    StratumMonomial,
    stable_stratum_betti,
    stratum_basis,
    stratum_betti_table,
)

__all__ = [
    "BasicProduct",
    "Partition",
    "StratumMonomial",
    "basic_products",
    "is_lyndon",
    "lyndon_words",
    "stable_stratum_betti",
    "standard_bracketing",
    "standard_factorization",
    "stratum_basis",
    "stratum_betti_table",
]
