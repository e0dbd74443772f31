# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import logging

import pytest

from strata_betti._util._warning import DISCREPANCY_LOGGER, _warning, _WarningsLogger


def test_discrepancy_warning():
    with _WarningsLogger() as logger:
        _warning("computed 4, published table gives 0")

    assert logger.warnings == ["computed 4, published table gives 0"]


def test_handover_exception():
    with pytest.raises(RuntimeError):
        with _WarningsLogger():
            raise RuntimeError("weewoo something went wrong")


def test_clear_warnings():
    with _WarningsLogger():
        _warning("lorem ipsum")

    with _WarningsLogger() as logger2:
        pass

    assert len(logger2.warnings) == 0


def test_handler_removed_after_exit():
    before = list(logging.getLogger(DISCREPANCY_LOGGER).handlers)
    with _WarningsLogger():
        assert len(logging.getLogger(DISCREPANCY_LOGGER).handlers) == len(before) + 1

    assert logging.getLogger(DISCREPANCY_LOGGER).handlers == before


def test_other_loggers_not_captured():
    with _WarningsLogger() as logger:
        logging.getLogger("strata_betti.cohomology").warning("not a discrepancy")

    assert logger.warnings == []


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
