# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT


class DuplicateGeneratorError(Exception):
    """Raised when two generators of an algebra share a name."""

    __module__ = "strata_betti"

    def __init__(self, name: str) -> None:
        super().__init__(f"Generator name '{name}' is used more than once.")


class InvalidDegreeError(Exception):
    """Raised when a generator is given a degree below 1."""

    __module__ = "strata_betti"

    def __init__(self, name: str, degree: int) -> None:
        super().__init__(
            f"Generator '{name}' has degree {degree}, but all generator degrees must be >= 1."
        )


class AlgebraMismatchError(Exception):
    """Raised when elements of two different algebras are combined."""

    __module__ = "strata_betti"

    def __init__(self) -> None:
        super().__init__("The operands belong to different algebras.")


class UnknownGeneratorError(Exception):
    """Raised when a generator name is not part of the algebra."""

    __module__ = "strata_betti"

    def __init__(self, name: str) -> None:
        super().__init__(f"The algebra has no generator named '{name}'.")


class ExpressionParseError(Exception):
    """Raised when a polynomial expression can not be read into an element."""

    __module__ = "strata_betti"


class DerivationDegreeError(Exception):
    """Raised when the image of a generator under a derivation has the wrong degree."""

    __module__ = "strata_betti"

    def __init__(self, name: str, expected: int, actual: int | None) -> None:
        super().__init__(
            f"The image of '{name}' must be homogeneous of degree {expected}, "
            f"got {'an inhomogeneous element' if actual is None else f'degree {actual}'}."
        )


class DifferentialSquareError(Exception):
    """Raised when a model is built from a derivation whose square does not vanish."""

    __module__ = "strata_betti"

    def __init__(self, name: str, value: str) -> None:
        super().__init__(f"d(d({name})) = {value} is not zero.")


class NotACocycleError(Exception):
    """Raised when an element that has to be closed is not killed by the differential."""

    __module__ = "strata_betti"

    def __init__(self, element: str) -> None:
        super().__init__(f"The element {element} is not a cocycle.")


class InsufficientTruncationError(Exception):
    """Raised when a series is asked for coefficients beyond its truncation bound."""

    __module__ = "strata_betti"

    def __init__(self, available: int, requested: int) -> None:
        super().__init__(
            f"Series are only known up to degree {available}, but degree {requested} is requested."
        )


class WindowTooSmallError(Exception):
    """Raised when a periodicity window does not fit into the known coefficients."""

    __module__ = "strata_betti"

    def __init__(self, onset: int, period: int, max_degree: int) -> None:
        super().__init__(
            f"onset + 2 * period = {onset + 2 * period} exceeds the truncation {max_degree}."
        )


class PartitionSyntaxError(Exception):
    """Raised when a partition string does not follow the 'a' / 'a^m' token grammar."""

    __module__ = "strata_betti"

    def __init__(self, token: str, reason: str) -> None:
        super().__init__(f"Invalid partition token '{token}': {reason}")


class RuleNotApplicableError(Exception):
    """Raised when a stable range rule is used outside of its hypotheses."""

    __module__ = "strata_betti"


class PresentationSchemaError(Exception):
    """Raised when a presentation .yaml-file is not valid against the schema."""

    __module__ = "strata_betti"
