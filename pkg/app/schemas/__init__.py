from app.schemas.group import SubgroupSchema, ConjugacyClassSchema, LatticeSchema
from app.schemas.category import MorphismSchema, OrbitCategorySchema
from app.schemas.coefficient import CoefficientSystemSchema, NatTransformationSchema
from app.schemas.homology import HomSchema, ResolutionTermSchema, ResolutionSchema, ExtSchema
from app.schemas.configuration import BettiSchema
from app.schemas.pipeline import (
    DecompositionRowSchema, DecompositionSchema, E2CellSchema, E2PageSchema, ConstantCohomologySchema
)

__all__ = [
    "SubgroupSchema", "ConjugacyClassSchema", "LatticeSchema",
    "MorphismSchema", "OrbitCategorySchema",
    "CoefficientSystemSchema", "NatTransformationSchema",
    "HomSchema", "ResolutionTermSchema", "ResolutionSchema", "ExtSchema",
    "BettiSchema",
    "DecompositionRowSchema", "DecompositionSchema", "E2CellSchema", "E2PageSchema", "ConstantCohomologySchema"
]
