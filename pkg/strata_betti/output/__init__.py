# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from .output_table import (
    OUTPUT_TABLE_SCHEMA,
    OutputFormat,
    OutputRow,
    OutputTable,
    render_tables,
)

__all__ = ["OUTPUT_TABLE_SCHEMA", "OutputFormat", "OutputRow", "OutputTable", "render_tables"]
