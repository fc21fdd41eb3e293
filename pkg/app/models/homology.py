"""
Results of homological algebra in the category of coefficient systems.
"""
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from app.models.coefficient import CoefficientSystem, NatTransformation, WeylModule
from app.utils import linalg
from app.utils.linalg import EchelonBasis


@dataclass(frozen=True, eq=False)
class HomBasis:
    """
    Canonical basis of Hom(M, N).

    Every natural transformation is flattened into one vector: the components
    f_X in object order, each row major. `echelon` is the reduced row echelon
    basis of the naturality constraints in that flattening.

    Attributes:
        source: M
        target: N
        basis: Basis transformations, one per free coordinate
        echelon: Echelon basis in the flattened coordinates
        offsets: Start of every component in the flattened vector
    """
    source: CoefficientSystem
    target: CoefficientSystem
    basis: tuple[NatTransformation, ...]
    echelon: EchelonBasis
    offsets: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def flatten(self, transformation: NatTransformation) -> DomainMatrix:
        values = []
        for component in transformation.components:
            for row in linalg.entries(component):
                values.extend(row)
        return linalg.matrix([[value] for value in values], (len(values), 1))

    def coordinates(self, transformation: NatTransformation) -> list:
        """Coordinates of a natural transformation M -> N in this basis."""
        column = self.echelon.coordinates(self.flatten(transformation))
        return [row[0] for row in linalg.entries(column)]


@dataclass(frozen=True, eq=False)
class KernelCokernel:
    """
    Objectwise kernel and cokernel of a natural transformation f: M -> N.

    Attributes:
        kernel: Ker f
        cokernel: Coker f
        inclusion: Ker f -> M
        projection: N -> Coker f
    """
    kernel: CoefficientSystem
    cokernel: CoefficientSystem
    inclusion: NatTransformation
    projection: NatTransformation


@dataclass(frozen=True, eq=False)
class InjectiveEnvelope:
    """
    Injective envelope eta: M -> E with E a sum of injectives I(V_h).

    Attributes:
        system: E
        eta: The embedding M -> E
        summands: Weyl module V_h of every class with V_h nonzero
    """
    system: CoefficientSystem
    eta: NatTransformation
    summands: tuple[WeylModule, ...]


@dataclass(frozen=True, eq=False)
class InjectiveResolution:
    """
    0 -> M -> I^0 -> I^1 -> ... with every I^k injective.

    Attributes:
        source: M
        terms: I^0, I^1, ...
        augmentation: M -> I^0
        differentials: I^k -> I^(k+1)
        summands: Weyl modules of every term's envelope
    """
    source: CoefficientSystem
    terms: tuple[CoefficientSystem, ...]
    augmentation: NatTransformation
    differentials: tuple[NatTransformation, ...]
    summands: tuple[tuple[WeylModule, ...], ...] = ()

    @property
    def length(self) -> int:
        return len(self.differentials)


@dataclass(frozen=True)
class HomFormulaComparison:
    """
    Hom(1_h, N) computed three ways for one class h.

    Attributes:
        class_index: h
        formula: Kernel intersection over morphisms from lower classes
        weyl_invariant_formula: Same, restricted to Weyl-fixed vectors
        hom_dim: Dimension from the naturality solver
    """
    class_index: int
    formula: int
    weyl_invariant_formula: int
    hom_dim: int

    @property
    def agrees(self) -> bool:
        return self.formula == self.hom_dim
