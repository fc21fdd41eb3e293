from pydantic import BaseModel, ConfigDict


class SubgroupSchema(BaseModel):
    index: int
    order: int
    class_index: int
    element_indices: list[int]


class ConjugacyClassSchema(BaseModel):
    index: int
    order: int
    label: str
    representative: int
    members: list[int]
    normalizer_order: int
    weyl_order: int
    above: list[int]


class LatticeSchema(BaseModel):
    schema_version: str
    group: str
    order: int
    degree: int
    elements: list[list[int]]
    subgroups: list[SubgroupSchema]
    classes: list[ConjugacyClassSchema]
    longest_chain: int

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
        str_strip_whitespace=True
    )
