# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from dataclasses import dataclass
from enum import Enum
from typing import Any, cast

import jsonschema


class IssueType(Enum):
    """General classification of the issue."""

    ADJUSTMENT_FAILED = "AdjustmentFailed"
    BETTI_MISMATCH = "BettiMismatch"
    ENGINE_DISAGREEMENT = "EngineDisagreement"
    FORMULA_DISAGREEMENT = "FormulaDisagreement"
    GENERATORS_DO_NOT_SPAN = "GeneratorsDoNotSpan"
    PERIODICITY_FAILURE = "PeriodicityFailure"
    PUBLISHED_DISCREPANCY = "PublishedDiscrepancy"
    QUOTIENT_DIMENSION_MISMATCH = "QuotientDimensionMismatch"
    RELATION_NOT_COBOUNDARY = "RelationNotCoboundary"

    @classmethod
    def names(cls) -> list[str]:
        """Return the string names of all IssueTypes as a list."""
        return [type_.value for type_ in cls]

    @property
    def is_failure(self) -> bool:
        """Return False for documented disagreements with published tables."""
        return self is not IssueType.PUBLISHED_DISCREPANCY


@dataclass
class IssueIdentifiers:
    """Information for locating an issue."""

    check: str | None = None
    d: int | None = None
    degree: int | None = None
    engine: str | None = None
    generator: str | None = None
    m: int | None = None
    relation: str | None = None

    def serialize(self) -> dict[str, str | int]:
        """Serialize the IssueIdentifiers into a JSON-compatible dictionary.

        Returns
        -------
        dict[str, str | int]
            The serialized IssueIdentifiers as a JSON-compatible dictionary
        """
        return _clean_dict(
            {
                "check": self.check,
                "d": self.d,
                "degree": self.degree,
                "engine": self.engine,
                "generator": self.generator,
                "m": self.m,
                "relation": self.relation,
            }
        )

    @classmethod
    def deserialize(cls, serialized_identifiers: dict[str, str | int]) -> "IssueIdentifiers":
        """Deserialize a JSON-compatible dictionary back into an IssueIdentifiers class instance.

        Parameters
        ----------
        serialized_identifiers : dict[str, str | int]
            The serialized IssueIdentifiers as a JSON-compatible dictionary

        Returns
        -------
        IssueIdentifiers
            The deserialized IssueIdentifiers class instance

        Raises
        ------
        jsonschema.exceptions.ValidationError
            If any of the fields have an unexpected type
        """
        _verify_identifiers_schema(serialized_identifiers)
        return IssueIdentifiers(
            check=cast(str | None, serialized_identifiers.get("check")),
            d=cast(int | None, serialized_identifiers.get("d")),
            degree=cast(int | None, serialized_identifiers.get("degree")),
            engine=cast(str | None, serialized_identifiers.get("engine")),
            generator=cast(str | None, serialized_identifiers.get("generator")),
            m=cast(int | None, serialized_identifiers.get("m")),
            relation=cast(str | None, serialized_identifiers.get("relation")),
        )


@dataclass
class Issue:
    """A disagreement found while computing or verifying a Betti table."""

    type: IssueType
    identifiers: IssueIdentifiers
    reason: str | None = None

    def serialize(self) -> dict[str, str | dict[str, str | int]]:
        """Serialize the Issue into a JSON-compatible dictionary.

        Returns
        -------
        dict[str, str | dict[str, str | int]]
            The serialized Issue as a JSON-compatible dictionary
        """
        return _clean_dict(
            {
                "type": str(self.type.value),
                "identifiers": self.identifiers.serialize(),
                "reason": self.reason,
            }
        )

    @classmethod
    def deserialize(cls, serialized_issue: dict[str, str | dict[str, str | int]]) -> "Issue":
        """Deserialize a JSON-compatible dictionary back into an Issue class instance.

        Parameters
        ----------
        serialized_issue : dict[str, str | dict[str, str | int]]
           The serialized Issue as a JSON-compatible dictionary

        Returns
        -------
        Issue
            The deserialized Issue class instance

        Raises
        ------
        jsonschema.exceptions.ValidationError
            If the serialized data does not match the Issue JSONSchema.
        """
        _verify_issue_schema(serialized_issue)
        return Issue(
            type=IssueType(serialized_issue["type"]),
            identifiers=IssueIdentifiers.deserialize(
                cast(dict[str, str | int], serialized_issue["identifiers"])
            ),
            reason=cast(str | None, serialized_issue.get("reason")),
        )

    def __str__(self) -> str:
        location = ", ".join(f"{k}={v}" for k, v in self.identifiers.serialize().items())
        text = f"{self.type.value}({location})"
        return f"{text}: {self.reason}" if self.reason else text


def failures(issues: list[Issue]) -> list[Issue]:
    """Return the issues that count as failures (everything but documented discrepancies)."""
    return [issue for issue in issues if issue.type.is_failure]


def _clean_dict(d: dict) -> dict:
    """Remove all fields in a dict that have a value of None."""
    return {k: v for k, v in d.items() if v is not None}


ISSUES_SCHEMA = {
    "type": "array",
    "definitions": {
        "issue": {
            "type": "object",
            "properties": {
                "type": {"enum": IssueType.names()},
                "identifiers": {
                    "type": "object",
                    "properties": {
                        "check": {"type": "string"},
                        "d": {"type": "integer", "minimum": 1},
                        "degree": {"type": "integer", "minimum": 0},
                        "engine": {"type": "string"},
                        "generator": {"type": "string"},
                        "m": {"type": "integer", "minimum": 1},
                        "relation": {"type": "string"},
                    },
                    "additionalProperties": False,
                },
                "reason": {"type": "string"},
            },
            "required": ["type", "identifiers"],
            "additionalProperties": False,
        },
    },
    "items": {"$ref": "#/definitions/issue"},
}


def _verify_issue_schema(d: dict) -> None:
    schema = cast(dict[str, Any], ISSUES_SCHEMA["definitions"])
    jsonschema.validate(d, schema["issue"])


def _verify_identifiers_schema(d: dict) -> None:
    schema = cast(dict[str, Any], ISSUES_SCHEMA["definitions"])
    jsonschema.validate(d, schema["issue"]["properties"]["identifiers"])
