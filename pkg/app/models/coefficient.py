"""
Rational Bredon coefficient systems and the maps between them.
"""
from dataclasses import dataclass, field

from sympy.polys.matrices import DomainMatrix

from app.models.category import OrbitCategory
from app.utils import linalg


@dataclass(frozen=True, eq=False)
class CoefficientSystem:
    """
    Contravariant functor from the orbit category to finite dimensional QQ vector spaces.

    Matrices act on column vectors: the matrix of a morphism phi: X -> Y has
    shape dims[X] x dims[Y] and represents M(phi): M(Y) -> M(X).

    Attributes:
        category: Orbit category the system lives over
        dims: Dimension of the value at every object
        matrices: Structure matrix of every morphism, by morphism index
        label: Human readable description
    """
    category: OrbitCategory
    dims: tuple[int, ...]
    matrices: tuple[DomainMatrix, ...]
    label: str = field(default="")

    def matrix(self, morphism: int) -> DomainMatrix:
        return self.matrices[morphism]

    @property
    def is_zero(self) -> bool:
        return not any(self.dims)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientSystem):
            return NotImplemented
        return (
            self.category is other.category
            and self.dims == other.dims
            and all(linalg.equal(mine, theirs) for mine, theirs in zip(self.matrices, other.matrices))
        )

    __hash__ = object.__hash__


@dataclass(frozen=True, eq=False)
class NatTransformation:
    """
    Natural transformation between coefficient systems.

    Attributes:
        source: Domain system M
        target: Codomain system N
        components: Per object X, a matrix of shape N.dims[X] x M.dims[X]
    """
    source: CoefficientSystem
    target: CoefficientSystem
    components: tuple[DomainMatrix, ...]

    def component(self, obj: int) -> DomainMatrix:
        return self.components[obj]


@dataclass(frozen=True, eq=False)
class WeylModule:
    """
    Left module over the rational group algebra of a Weyl group.

    Attributes:
        class_index: Object whose Weyl group acts
        dim: Dimension of the module
        action: Matrix of every Weyl element, indexed by coset position
    """
    class_index: int
    dim: int
    action: tuple[DomainMatrix, ...]


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of a consistency check; `violation` describes the first failure.

    Attributes:
        ok: True when every checked identity holds
        violation: Text description of the failing square
        morphisms: Morphism indices involved in the failure
    """
    ok: bool
    violation: str | None = None
    morphisms: tuple[int, ...] = ()
