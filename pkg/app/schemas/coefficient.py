from pydantic import BaseModel, ConfigDict

Entry = tuple[int, int]


class CoefficientSystemSchema(BaseModel):
    """
    JSON form of a coefficient system.

    Matrix entries are (numerator, denominator) pairs; matrices are keyed by
    morphism index and have shape dims[source] x dims[target].
    """
    schema_version: str
    group: str
    label: str = ""
    dims: list[int]
    matrices: dict[int, list[list[Entry]]]

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
        str_strip_whitespace=True
    )


class NatTransformationSchema(BaseModel):
    """One matrix per object, shape target dim x source dim."""
    components: list[list[list[Entry]]]
