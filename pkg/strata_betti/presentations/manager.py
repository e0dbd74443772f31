# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

"""Built-in ring presentations for strata-betti.

The presentations of the cohomology rings of the spaces of degree l maps CP^2 -> S^4 and
CP^3 -> S^6 ship as YAML files, so they can be checked without writing them out by hand:

    from strata_betti.presentations import get_presentation_path, load_presentation

    loaded = load_presentation(get_presentation_path("cp3"))

All presentation files are stored in the config/presentations/ directory of the package.
"""

from __future__ import annotations

from pathlib import Path

_PRESENTATIONS = {
    "cp2": "cp2.yaml",
    "cp3": "cp3.yaml",
}

_SCHEMAS = {
    "presentation": "presentation_schema.yaml",
}


def _get_config_dir() -> Path:
    """Get the path to the config directory shipped inside the package."""
    config_dir = Path(__file__).parent.parent / "config"

    if not config_dir.exists():
        msg = f"Config directory not found at: {config_dir}"
        raise FileNotFoundError(msg)

    return config_dir


def get_presentation_path(presentation_name: str) -> Path:
    """Get the path to a built-in presentation file.

    Parameters
    ----------
    presentation_name : str
        Name of the presentation. Supported values:
        - "cp2": H*(map_l(CP^2, S^4)) on b2, c7 with b2^3 = c7^2 = 0
        - "cp3": H*(map_l(CP^3, S^6)) on b2, b4, c11, c13

    Returns
    -------
    Path
        Path to the presentation YAML file (located in config/presentations/)

    Raises
    ------
    ValueError
        If the presentation name is not recognized
    """
    if presentation_name not in _PRESENTATIONS:
        msg = (
            f"Unknown presentation '{presentation_name}'. "
            f"Supported presentations: {', '.join(_PRESENTATIONS.keys())}"
        )
        raise ValueError(msg)

    presentation_path = _get_config_dir() / "presentations" / _PRESENTATIONS[presentation_name]

    if not presentation_path.exists():
        msg = f"Presentation file not found: {presentation_path}"
        raise FileNotFoundError(msg)

    return presentation_path


def get_schema_path(schema_name: str) -> Path:
    """Get the path to a built-in schema file.

    Parameters
    ----------
    schema_name : str
        Name of the schema. Supported values:
        - "presentation": schema of the ring presentation files

    Returns
    -------
    Path
        Path to the schema file (located in config/schemas/)

    Raises
    ------
    ValueError
        If the schema name is not recognized
    """
    if schema_name not in _SCHEMAS:
        msg = f"Unknown schema '{schema_name}'. Supported schemas: {', '.join(_SCHEMAS.keys())}"
        raise ValueError(msg)

    schema_path = _get_config_dir() / "schemas" / _SCHEMAS[schema_name]

    if not schema_path.exists():
        msg = f"Schema file not found: {schema_path}"
        raise FileNotFoundError(msg)

    return schema_path


def list_available_presentations() -> list[str]:
    """List all available built-in presentations."""
    return list(_PRESENTATIONS)


def list_available_schemas() -> list[str]:
    """List all available built-in schemas."""
    return list(_SCHEMAS)


__all__ = [
    "get_presentation_path",
    "get_schema_path",
    "list_available_presentations",
    "list_available_schemas",
]
