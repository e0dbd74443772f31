# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import jsonschema
import yaml

from strata_betti.algebra import Element, parse_element
from strata_betti.cohomology import (
    DgaModel,
    PresentationGenerator,
    RingPresentation,
    cohomology_in_degree,
    make_ring_presentation,
)
from strata_betti.exceptions import PresentationSchemaError
from strata_betti.models import moller_raussen

from .manager import get_presentation_path, get_schema_path, list_available_presentations

logger = logging.getLogger(__name__)


@dataclass
class _GeneratorEntry:
    name: str
    degree: int
    representative: str | int
    adjustable: bool

    @classmethod
    def fromdict(cls, name: str, data: dict) -> _GeneratorEntry:
        representative = data["representative"]
        if isinstance(representative, dict):
            representative = int(representative["cohomology_basis_index"])
        return _GeneratorEntry(
            name=name,
            degree=data["degree"],
            representative=representative,
            adjustable=data.get("adjustable", False),
        )

    def resolve(self, model: DgaModel) -> Element:
        if isinstance(self.representative, str):
            representative = parse_element(model.algebra, self.representative)
        else:
            cohomology = cohomology_in_degree(model, self.degree)
            if self.representative >= cohomology.betti:
                msg = (
                    f"{self.name} refers to cohomology basis element {self.representative}, "
                    f"but H^{self.degree} of {model.label} has dimension {cohomology.betti}."
                )
                raise ValueError(msg)
            representative = cohomology.representatives[self.representative]
        return representative


@dataclass
class PresentationFile:
    """A ring presentation as stored on disk, before it is bound to a model."""

    family: str
    m: int
    max_degree: int
    generators: list[_GeneratorEntry]
    relations: list[str]
    description: str = ""

    @classmethod
    def fromdict(cls, data: dict) -> PresentationFile:
        return PresentationFile(
            family=data["model"]["family"],
            m=data["model"]["m"],
            max_degree=data["max_degree"],
            generators=[
                _GeneratorEntry.fromdict(name, entry) for name, entry in data["generators"].items()
            ],
            relations=list(data["relations"]),
            description=data.get("description", ""),
        )

    def build_model(self) -> DgaModel:
        return moller_raussen(self.m)


@dataclass
class LoadedPresentation:
    """A presentation bound to the model it describes."""

    model: DgaModel
    presentation: RingPresentation
    max_degree: int
    description: str = ""


def read_presentation_file(source: str | Path | dict) -> PresentationFile:
    """Read and validate a presentation.

    Parameters
    ----------
    source : str | Path | dict
        A built-in presentation name, a path to a YAML file or already loaded YAML data.

    Raises
    ------
    PresentationSchemaError
        If the data does not adhere to the presentation schema.
    """
    if isinstance(source, str) and source in list_available_presentations():
        source = get_presentation_path(source)
    if isinstance(source, str | Path):
        with Path(source).open() as f:
            source = yaml.safe_load(f)

    _validate_presentation_schema(source)
    return PresentationFile.fromdict(source)


def load_presentation(
    source: str | Path | dict, model: DgaModel | None = None
) -> LoadedPresentation:
    """Read a presentation and resolve its representatives in the model.

    Representatives are given either as expressions in the model's generators or as an index
    into the cohomology basis that ``cohomology_in_degree`` returns for the generator's degree.

    Parameters
    ----------
    source : str | Path | dict
        A built-in presentation name, a path to a YAML file or already loaded YAML data.
    model : DgaModel | None, optional
        The model to use instead of the one named in the file.

    Returns
    -------
    LoadedPresentation
        The model, the presentation and the degree up to which it is claimed.
    """
    presentation_file = read_presentation_file(source)
    if model is None:
        model = presentation_file.build_model()

    generators = [
        PresentationGenerator(
            name=entry.name,
            degree=entry.degree,
            representative=entry.resolve(model),
            adjustable=entry.adjustable,
        )
        for entry in presentation_file.generators
    ]
    presentation = make_ring_presentation(generators, presentation_file.relations)
    logger.debug(
        "Loaded presentation on %s for %s", ", ".join(g.name for g in generators), model.label
    )
    return LoadedPresentation(
        model=model,
        presentation=presentation,
        max_degree=presentation_file.max_degree,
        description=presentation_file.description,
    )


def _validate_presentation_schema(data: dict) -> None:
    with get_schema_path("presentation").open() as f:
        presentation_schema = yaml.safe_load(f)

    validator = jsonschema.Draft7Validator(schema=presentation_schema)

    schema_errors = ""
    for error in validator.iter_errors(data):
        schema_errors += f"${error.json_path[1:]}: {error.message}\n"

    if schema_errors != "":
        raise PresentationSchemaError(
            "The provided presentation is not valid. The following errors have been found:\n"
            + schema_errors
        )
