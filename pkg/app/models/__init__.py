from app.models.group import (
    ConjugacyClass, FiniteGroup, GSet, Permutation, Subgroup, SubgroupLattice, WeylGroup
)
from app.models.category import Morphism, OrbitCategory
from app.models.coefficient import CoefficientSystem, NatTransformation, ValidationReport, WeylModule
from app.models.homology import (
    HomBasis, HomFormulaComparison, InjectiveEnvelope, InjectiveResolution, KernelCokernel
)
from app.models.configuration import BettiTable, Monomial, RingElement
from app.models.pipeline import (
    DecompositionRow, DecompositionTable, E2Page, GRepresentation, HypothesisViolation
)

__all__ = [
    "ConjugacyClass", "FiniteGroup", "GSet", "Permutation", "Subgroup", "SubgroupLattice", "WeylGroup",
    "Morphism", "OrbitCategory",
    "CoefficientSystem", "NatTransformation", "ValidationReport", "WeylModule",
    "HomBasis", "HomFormulaComparison", "InjectiveEnvelope", "InjectiveResolution", "KernelCokernel",
    "BettiTable", "Monomial", "RingElement",
    "DecompositionRow", "DecompositionTable", "E2Page", "GRepresentation", "HypothesisViolation"
]
