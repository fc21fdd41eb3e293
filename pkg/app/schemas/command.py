from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, model_validator

from app.core.exceptions import ComputationError
from app.schemas.validation_types import (
    ValidCoefficient,
    ValidDimension,
    ValidGroup,
    ValidPoints,
    ValidRepresentation,
)
from app.services.constant.response_constant import UNSUPPORTED_FORMAT_ERROR


class Command(str, Enum):
    LATTICE = "lattice"
    ORBITCAT = "orbitcat"
    BETTI = "betti"
    DECOMPOSE = "decompose"
    RESOLVE = "resolve"
    HOM = "hom"
    EXT = "ext"
    E2PAGE = "e2page"
    COHOMOLOGY = "cohomology"
    CONSTQ = "constq"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    DOT = "dot"


TABLE_FORMATS = frozenset({OutputFormat.TEXT, OutputFormat.JSON, OutputFormat.CSV})

COMMAND_FORMATS = {
    Command.LATTICE: TABLE_FORMATS | {OutputFormat.DOT},
    Command.ORBITCAT: TABLE_FORMATS | {OutputFormat.DOT},
    Command.BETTI: TABLE_FORMATS,
    Command.DECOMPOSE: TABLE_FORMATS,
    Command.RESOLVE: TABLE_FORMATS,
    Command.HOM: TABLE_FORMATS,
    Command.EXT: TABLE_FORMATS,
    Command.E2PAGE: TABLE_FORMATS,
    Command.COHOMOLOGY: TABLE_FORMATS,
    Command.CONSTQ: TABLE_FORMATS,
}


class CommandConfig(BaseModel):
    """
    One fully parsed command line invocation.

    `source` is the first argument of hom and ext, `coefficient` the second
    one and the coefficient system of e2page and cohomology.
    """
    command: Command
    group: ValidGroup = "D8"
    points: ValidPoints = 3
    dimension: ValidDimension = 2
    representation: ValidRepresentation = "regular"
    source: ValidCoefficient = "constQ"
    coefficient: ValidCoefficient = "atom:0"
    format: OutputFormat = OutputFormat.TEXT
    output: Path | None = None

    model_config = ConfigDict(
        populate_by_name=True,
        str_strip_whitespace=True
    )

    @model_validator(mode="after")
    def format_is_supported(self) -> "CommandConfig":
        if self.format not in COMMAND_FORMATS[self.command]:
            raise ComputationError(UNSUPPORTED_FORMAT_ERROR, value=f"{self.format.value} for {self.command.value}")
        return self
