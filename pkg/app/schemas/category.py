from pydantic import BaseModel, ConfigDict


class MorphismSchema(BaseModel):
    index: int
    source: int
    target: int
    representative: int


class OrbitCategorySchema(BaseModel):
    """
    Objects, hom-set sizes and the composition table.

    Each composition entry is [f, g, f . g] with g applied first.
    """
    schema_version: str
    group: str
    objects: list[int]
    labels: list[str]
    hom_sizes: list[list[int]]
    identities: list[int]
    morphisms: list[MorphismSchema]
    composition: list[tuple[int, int, int]]
    algebra_dimension: int

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
        str_strip_whitespace=True
    )
