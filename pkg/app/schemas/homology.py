from pydantic import BaseModel, ConfigDict

from app.schemas.coefficient import NatTransformationSchema


class HomSchema(BaseModel):
    schema_version: str
    group: str
    source: str
    target: str
    dim: int
    basis: list[NatTransformationSchema]


class ResolutionTermSchema(BaseModel):
    degree: int
    dims: list[int]
    summands: list[int]


class ResolutionSchema(BaseModel):
    """Term dimensions per object and the differential components, I^k -> I^(k+1)."""
    schema_version: str
    group: str
    source: str
    terms: list[ResolutionTermSchema]
    augmentation: NatTransformationSchema
    differentials: list[NatTransformationSchema]


class ExtSchema(BaseModel):
    schema_version: str
    group: str
    source: str
    target: str
    ext: list[int]
    hom_complex: list[int]

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
        str_strip_whitespace=True
    )
