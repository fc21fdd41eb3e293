from pydantic import BaseModel, ConfigDict


class DecompositionRowSchema(BaseModel):
    degree: int
    constant: int
    atoms: dict[int, int]


class DecompositionSchema(BaseModel):
    schema_version: str
    group: str
    q: int
    representation: str
    dimension: int
    fixed_dims: list[int]
    rows: list[DecompositionRowSchema]

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
        str_strip_whitespace=True
    )


class E2CellSchema(BaseModel):
    p: int
    q: int
    ext: int
    hom: int


class E2PageSchema(BaseModel):
    """Nonzero cells of the Ext and Hom-complex tables, plus the E2 totals per degree."""
    schema_version: str
    group: str
    points: int
    coefficient: str
    length: int
    degrees: list[int]
    cells: list[E2CellSchema]
    totals: dict[int, int]


class ConstantCohomologySchema(BaseModel):
    schema_version: str
    group: str
    q: int
    representation: str
    dims: dict[int, int]


class CohomologyRowSchema(BaseModel):
    degree: int
    hom: int
    ext: int
    upper_bound: bool


class CohomologySchema(BaseModel):
    """Ranks per total degree; rows flagged upper_bound may still drop through a differential."""
    schema_version: str
    group: str
    points: int
    representation: str
    coefficient: str
    rows: list[CohomologyRowSchema]
