# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT
"""Configuration file for Sphinx."""

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

import strata_betti

# -- Project information -----------------------------------------------------

try:
    import tomllib
except ImportError:
    import tomli as tomllib  # type: ignore[no-redef]
with open("../../pyproject.toml", "rb") as f:
    _metadata = tomllib.load(f)["project"]

project = "strata-betti"
pypi = _metadata["name"]
author = _metadata["authors"][0]["name"]
copyright = author
license = _metadata["license"]["text"]
install_requirements = _metadata["dependencies"]
python_requirement = _metadata["requires-python"]

version = strata_betti.__version__
rst_epilog = f"""
.. |Project| replace:: {project}
.. |Version| replace:: {version}
.. |Python| replace:: {python_requirement}
"""


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx_copybutton",
]

templates_path = ["_templates"]


# -- Options for copy-button -------------------------------------------------
copybutton_prompt_text = r"\$ "
copybutton_prompt_is_regexp = True
copybutton_line_continuation_character = "\\"


# -- Options for auto-doc ----------------------------------------------------
autoclass_content = "class"
autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_default_options = {
    "members": True,
    "exclude-members": "__weakref__, __init__",
}


# -- Options for napoleon ----------------------------------------------------
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = True
napoleon_use_rtype = False


# -- Options for Intersphinx output ------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "sympy": ("https://docs.sympy.org/latest", None),
}


# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_title = f"{project} {version}"
html_theme_options = {
    "source_repository": "https://github.com/strata-betti/strata-betti",
    "source_branch": "main",
    "source_directory": "docs/source/",
}

pygments_style = "tango"
pygments_dark_style = "monokai"
