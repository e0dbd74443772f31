# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
from io import StringIO
from types import TracebackType

DISCREPANCY_LOGGER = "strata_betti.discrepancies"


class _WarningsLogger:
    """Collect the discrepancy warnings emitted while the context is active."""

    def __init__(self) -> None:
        self.warnings: list[str] = []
        self._stream = StringIO()
        self._handler = logging.StreamHandler(self._stream)
        self._handler.setLevel(logging.WARNING)

    def __enter__(self) -> _WarningsLogger:
        logging.getLogger(DISCREPANCY_LOGGER).addHandler(self._handler)
        return self

    def __exit__(
        self,
        typ: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        logging.getLogger(DISCREPANCY_LOGGER).removeHandler(self._handler)
        self.warnings = [line for line in self._stream.getvalue().split("\n") if line]


def _warning(message: str) -> None:
    """Emit a discrepancy warning."""
    logging.getLogger(DISCREPANCY_LOGGER).warning(message)
