"""
Finite permutation groups, subgroups, their lattice up to conjugacy, and finite G-sets.

All values are immutable. Elements of a group are referred to by their index in
`FiniteGroup.elements`, which is sorted lexicographically on image sequences, so
the identity always has index 0.
"""
from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Bijection of {0..degree-1} given by its image sequence.

    Products follow function composition: (a * b)(x) = a(b(x)).
    """
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[point] for point in other.images))

    def inverse(self) -> "Permutation":
        inverse_images = [0] * self.degree
        for point, image in enumerate(self.images):
            inverse_images[image] = point
        return Permutation(tuple(inverse_images))

    def fixes(self, point: int) -> bool:
        return self.images[point] == point


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    Finite group of permutations with a deterministic element order.

    Attributes:
        degree: Number of points acted on
        generators: Generating permutations
        elements: Every element, sorted lexicographically on images
        name: Descriptor the group was built from
    """
    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def positions(self) -> dict[Permutation, int]:
        return {element: index for index, element in enumerate(self.elements)}

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        """Multiplication table on element indices: table[a][b] = index of a * b."""
        positions = self.positions
        return tuple(
            tuple(positions[left * right] for right in self.elements)
            for left in self.elements
        )

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        positions = self.positions
        return tuple(positions[element.inverse()] for element in self.elements)

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.positions[generator] for generator in self.generators)

    def mul(self, left: int, right: int) -> int:
        return self.table[left][right]

    def inv(self, element: int) -> int:
        return self.inverses[element]

    def conjugate(self, element: int, by: int) -> int:
        """Index of by * element * by^-1."""
        return self.mul(self.mul(by, element), self.inv(by))


@dataclass(frozen=True, order=True)
class Subgroup:
    """Subgroup as the sorted indices of its elements in the parent group."""
    element_indices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.element_indices)

    def __contains__(self, element: int) -> bool:
        return element in self.members

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.element_indices)


@dataclass(frozen=True)
class ConjugacyClass:
    """
    Conjugacy class of subgroups.

    Attributes:
        index: Position in the canonical class order
        members: Indices of the conjugate subgroups in the lattice
        representative: Index of the lexicographically minimal member
    """
    index: int
    members: tuple[int, ...]
    representative: int


@dataclass(frozen=True)
class WeylGroup:
    """
    Weyl group N_G(H)/H of a class representative H.

    Cosets nH are stored by their minimal element index; `table[a][b]` is the
    position of the coset (cosets[a] * cosets[b])H.
    """
    class_index: int
    cosets: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.cosets)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def mul(self, left: int, right: int) -> int:
        return self.table[left][right]

    def inverse(self, position: int) -> int:
        return self.inverses[position]


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """
    Every subgroup of a finite group, organised by conjugacy.

    Classes are ordered by subgroup order and then by the element indices of
    their representative, so class 0 is the trivial subgroup and the last
    class is the whole group.

    Attributes:
        group: The ambient group
        subgroups: All subgroups, sorted by (order, element indices)
        classes: Conjugacy classes in canonical order
        class_of: Class index of every subgroup
        subconjugacy: subconjugacy[i][j] is True when a conjugate of class i lies in class j
        normalizers: Normalizer of every subgroup
        weyl: Weyl group of every class representative
    """
    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    classes: tuple[ConjugacyClass, ...]
    class_of: tuple[int, ...]
    subconjugacy: tuple[tuple[bool, ...], ...]
    normalizers: tuple[Subgroup, ...]
    weyl: tuple[WeylGroup, ...]
    labels: tuple[str, ...] = field(default=())

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def top(self) -> int:
        return len(self.classes) - 1

    def representative(self, class_index: int) -> Subgroup:
        return self.subgroups[self.classes[class_index].representative]

    def is_subconjugate(self, lower: int, upper: int) -> bool:
        return self.subconjugacy[lower][upper]

    def class_order(self, class_index: int) -> int:
        return self.representative(class_index).order

    def label(self, class_index: int) -> str:
        if self.labels:
            return self.labels[class_index]
        return f"H{class_index}"

    def levels(self) -> dict[int, tuple[int, ...]]:
        """Class indices grouped by subgroup order."""
        grouped: dict[int, list[int]] = {}
        for conjugacy_class in self.classes:
            grouped.setdefault(self.class_order(conjugacy_class.index), []).append(conjugacy_class.index)
        return {order: tuple(indices) for order, indices in sorted(grouped.items())}


@dataclass(frozen=True, eq=False)
class GSet:
    """
    Finite set with a left action of a group.

    Attributes:
        size: Number of points
        action: Permutation of the points for every group generator
        element_action: Permutation of the points for every group element
        points: For coset spaces, the minimal element index of each coset
        label: Optional description such as "G/H"
    """
    size: int
    action: tuple[Permutation, ...]
    element_action: tuple[Permutation, ...]
    points: tuple[int, ...] = ()
    label: str | None = None
