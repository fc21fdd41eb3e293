"""
Validation type.
"""
import re
from typing import Annotated

from pydantic import BeforeValidator

from app.core.exceptions import ComputationError
from app.services.constant.response_constant import (
    INVALID_COEFFICIENT_DESCRIPTOR_ERROR,
    INVALID_DIMENSION_ERROR,
    INVALID_POINT_COUNT_ERROR,
    INVALID_REPRESENTATION_DESCRIPTOR_ERROR,
    UNKNOWN_GROUP_DESCRIPTOR_ERROR,
)

COEFFICIENT_REGEX = re.compile(r"^(constQ|zero|(atom|injective|regular-injective|homology):\d+)$")
REPRESENTATION_REGEX = re.compile(r"^(regular|free:[1-9]\d*|orbits:\d+x[1-9]\d*(,\d+x[1-9]\d*)*)$")


def group_is_valid(group: str) -> str:
    """
    Strip the group descriptor; the group itself is resolved when it is loaded.
    """
    group = str(group).strip()
    if not group:
        raise ComputationError(UNKNOWN_GROUP_DESCRIPTOR_ERROR, value=group)
    return group


def _positive(value, error: dict) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError) as exception:
        raise ComputationError(error, value=value) from exception
    if number < 1:
        raise ComputationError(error, value=value)
    return number


def points_is_valid(points) -> int:
    return _positive(points, INVALID_POINT_COUNT_ERROR)


def dimension_is_valid(dimension) -> int:
    return _positive(dimension, INVALID_DIMENSION_ERROR)


def coefficient_is_valid(descriptor: str) -> str:
    """
    Validate a coefficient descriptor such as "constQ" or "atom:0".
    :raises ComputationError: If the descriptor cannot be parsed.
    """
    descriptor = str(descriptor).strip()
    if not COEFFICIENT_REGEX.match(descriptor):
        raise ComputationError(INVALID_COEFFICIENT_DESCRIPTOR_ERROR, value=descriptor)
    return descriptor


def representation_is_valid(descriptor: str) -> str:
    descriptor = str(descriptor).replace(" ", "")
    if not REPRESENTATION_REGEX.match(descriptor):
        raise ComputationError(INVALID_REPRESENTATION_DESCRIPTOR_ERROR, value=descriptor)
    return descriptor


ValidGroup = Annotated[str, BeforeValidator(group_is_valid)]
ValidPoints = Annotated[int, BeforeValidator(points_is_valid)]
ValidDimension = Annotated[int, BeforeValidator(dimension_is_valid)]
ValidCoefficient = Annotated[str, BeforeValidator(coefficient_is_valid)]
ValidRepresentation = Annotated[str, BeforeValidator(representation_is_valid)]
