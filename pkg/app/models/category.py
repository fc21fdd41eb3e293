"""
Reduced canonical orbit category of a finite group.
"""
from dataclasses import dataclass
from functools import cached_property

from app.models.group import SubgroupLattice


@dataclass(frozen=True)
class Morphism:
    """
    G-map G/H_source -> G/H_target sending the base coset to representative * H_target.

    Attributes:
        index: Global morphism index
        source: Source object (class index)
        target: Target object (class index)
        representative: Minimal element index of the image coset
    """
    index: int
    source: int
    target: int
    representative: int


@dataclass(frozen=True, eq=False)
class OrbitCategory:
    """
    One object per conjugacy class of subgroups, morphisms the G-maps between orbits.

    Attributes:
        lattice: Subgroup lattice the category is built from
        objects: Class indices in lattice order
        morphisms: Every morphism, grouped by (source, target) and ordered by representative
        hom_sets: hom_sets[i][j] lists the indices of the morphisms i -> j
        composition: composition[(f, g)] is the index of f . g for g: i -> j and f: j -> k
        identities: Index of the identity morphism of every object
    """
    lattice: SubgroupLattice
    objects: tuple[int, ...]
    morphisms: tuple[Morphism, ...]
    hom_sets: tuple[tuple[tuple[int, ...], ...], ...]
    composition: dict[tuple[int, int], int]
    identities: tuple[int, ...]

    def hom(self, source: int, target: int) -> tuple[int, ...]:
        return self.hom_sets[source][target]

    def morphism(self, index: int) -> Morphism:
        return self.morphisms[index]

    def endomorphisms(self, obj: int) -> tuple[int, ...]:
        return self.hom_sets[obj][obj]

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """Position of every morphism inside its hom-set."""
        positions = [0] * len(self.morphisms)
        for row in self.hom_sets:
            for hom_set in row:
                for position, index in enumerate(hom_set):
                    positions[index] = position
        return tuple(positions)

    def position(self, index: int) -> int:
        return self.positions[index]

    @property
    def morphism_count(self) -> int:
        return len(self.morphisms)

    def label(self, obj: int) -> str:
        return self.lattice.label(obj)
