from pydantic import BaseModel


class BettiSchema(BaseModel):
    schema_version: str
    n: int
    q: int
    ranks: dict[int, int]
    total: int
