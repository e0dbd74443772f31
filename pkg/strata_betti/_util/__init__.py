# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from ._warning import DISCREPANCY_LOGGER, _warning, _WarningsLogger

__all__ = ["DISCREPANCY_LOGGER", "_WarningsLogger", "_warning"]
