# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT
"""Built-in ring presentations and their loader."""

from .load_presentation import (
    LoadedPresentation,
    PresentationFile,
    load_presentation,
    read_presentation_file,
)
from .manager import (
    get_presentation_path,
    get_schema_path,
    list_available_presentations,
    list_available_schemas,
)

__all__ = [
    "LoadedPresentation",
    "PresentationFile",
    "get_presentation_path",
    "get_schema_path",
    "list_available_presentations",
    "list_available_schemas",
    "load_presentation",
    "read_presentation_file",
]
