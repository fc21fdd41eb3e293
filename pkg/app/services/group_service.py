"""
Finite permutation groups and their subgroup lattices.

Groups are built with sympy.combinatorics from a descriptor string, then
flattened into an indexed element list so that everything downstream works
with integer element indices and precomputed multiplication tables.
"""
import re
from itertools import combinations

from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import (
    AlternatingGroup,
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)

from app.core.exceptions import ComputationError
from app.core.logger import log
from app.core.settings import settings
from app.models.group import (
    ConjugacyClass,
    FiniteGroup,
    GSet,
    Permutation,
    Subgroup,
    SubgroupLattice,
    WeylGroup,
)
from app.services.constant.response_constant import (
    GROUP_ORDER_CAP_EXCEEDED_ERROR,
    INTERNAL_CONSISTENCY_ERROR,
    INVALID_GENERATOR_ERROR,
    NOT_A_SUBGROUP_ERROR,
    UNKNOWN_GROUP_DESCRIPTOR_ERROR,
)

NAMED_GROUP_REGEX = re.compile(r"^(?P<family>[CDSA])(?P<size>\d+)$")
PERMUTATION_GROUP_REGEX = re.compile(r"^perm:(?P<degree>\d+):(?P<generators>.*)$")
CYCLE_REGEX = re.compile(r"\(([^()]*)\)")

# Quaternion group acting regularly on its eight elements.
QUATERNION_GENERATORS = ("(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)")


def _resolve_cap(cap: int | None) -> int:
    return settings.GROUP_ORDER_CAP if cap is None else cap


def _parse_cycles(degree: int, text: str) -> SympyPermutation:
    """
    Parse one generator written in cycle notation, e.g. "(0 1 2)(3 4)".
    """
    cycles = []
    for cycle_text in CYCLE_REGEX.findall(text):
        points = [int(point) for point in re.split(r"[\s,]+", cycle_text.strip()) if point]
        if any(point >= degree for point in points) or len(set(points)) != len(points):
            raise ComputationError(INVALID_GENERATOR_ERROR, value=text)
        if len(points) > 1:
            cycles.append(points)
    if CYCLE_REGEX.sub("", text).strip():
        raise ComputationError(INVALID_GENERATOR_ERROR, value=text)
    return SympyPermutation(cycles, size=degree)


def _sympy_group(name: str) -> PermutationGroup:
    descriptor = name.strip()
    if descriptor == "Q8":
        return PermutationGroup([_parse_cycles(8, generator) for generator in QUATERNION_GENERATORS])

    named = NAMED_GROUP_REGEX.match(descriptor)
    if named:
        family, size = named.group("family"), int(named.group("size"))
        if family == "C" and size >= 1:
            return CyclicGroup(size)
        if family == "D" and size >= 2 and size % 2 == 0:
            return DihedralGroup(size // 2)
        if family == "S" and size >= 1:
            return SymmetricGroup(size)
        if family == "A" and size >= 1:
            return AlternatingGroup(size)
        raise ComputationError(UNKNOWN_GROUP_DESCRIPTOR_ERROR, value=name)

    raw = PERMUTATION_GROUP_REGEX.match(descriptor)
    if raw:
        degree = int(raw.group("degree"))
        if degree < 1:
            raise ComputationError(UNKNOWN_GROUP_DESCRIPTOR_ERROR, value=name)
        generators = [text for text in raw.group("generators").split(";") if text.strip()]
        parsed = [_parse_cycles(degree, text) for text in generators]
        if not parsed:
            parsed = [SympyPermutation(list(range(degree)))]
        return PermutationGroup(parsed)

    raise ComputationError(UNKNOWN_GROUP_DESCRIPTOR_ERROR, value=name)


def make_named_group(name: str, cap: int | None = None) -> FiniteGroup:
    """
    Build a finite group from a descriptor.

    Args:
        name: "C<n>", "D<2n>", "S<n>", "A<n>", "Q8" or "perm:<degree>:<cycles;...>"
        cap: Largest admissible order, defaults to settings.GROUP_ORDER_CAP

    Returns:
        FiniteGroup: The group with its elements sorted lexicographically

    Raises:
        ComputationError: Unknown descriptor or order above the cap
    """
    cap = _resolve_cap(cap)
    group = _sympy_group(name)
    order = int(group.order())
    if order > cap:
        raise ComputationError(GROUP_ORDER_CAP_EXCEEDED_ERROR, value=f"{name} has order {order} > {cap}")

    degree = group.degree
    elements = sorted(Permutation(tuple(element.array_form)) for element in group.generate())
    generators = tuple(Permutation(tuple(generator.array_form)) for generator in group.generators)
    log.debug(f"Built group {name} of order {order} on {degree} points")
    return FiniteGroup(degree=degree, generators=generators, elements=tuple(elements), name=name.strip())


def closure(g: FiniteGroup, generators: set[int] | frozenset[int]) -> frozenset[int]:
    """Subgroup generated by a set of element indices."""
    generators = tuple(generators)
    elements = {0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for element in frontier:
            for generator in generators:
                product = g.mul(element, generator)
                if product not in elements:
                    elements.add(product)
                    next_frontier.append(product)
        frontier = next_frontier
    return frozenset(elements)


def make_subgroup(g: FiniteGroup, element_indices) -> Subgroup:
    """
    Validate a set of element indices as a subgroup.

    Raises:
        ComputationError: When the set misses the identity or is not closed
    """
    members = frozenset(element_indices)
    if 0 not in members or any(index < 0 or index >= g.order for index in members):
        raise ComputationError(NOT_A_SUBGROUP_ERROR, value=sorted(members))
    for left in members:
        if g.inv(left) not in members:
            raise ComputationError(NOT_A_SUBGROUP_ERROR, value=sorted(members))
        for right in members:
            if g.mul(left, right) not in members:
                raise ComputationError(NOT_A_SUBGROUP_ERROR, value=sorted(members))
    return Subgroup(tuple(sorted(members)))


def _conjugate_set(g: FiniteGroup, members: frozenset[int], by: int) -> frozenset[int]:
    return frozenset(g.conjugate(element, by) for element in members)


def _subgroup_key(members: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return len(members), tuple(sorted(members))


def enumerate_subgroups(g: FiniteGroup, cap: int | None = None) -> list[frozenset[int]]:
    """
    Every subgroup, by layered closure.

    Start from the cyclic subgroups and keep joining each newly found subgroup
    with every cyclic subgroup until nothing new appears. Every subgroup is
    generated by its cyclic subgroups, so the search is complete.
    """
    cap = _resolve_cap(cap)
    if g.order > cap:
        raise ComputationError(GROUP_ORDER_CAP_EXCEEDED_ERROR, value=f"{g.name} has order {g.order} > {cap}")

    cyclic = list(dict.fromkeys(closure(g, {element}) for element in range(g.order)))
    found = dict.fromkeys(cyclic)
    frontier = list(cyclic)
    while frontier:
        next_frontier = []
        for subgroup in frontier:
            for cyclic_subgroup in cyclic:
                if cyclic_subgroup <= subgroup:
                    continue
                joined = closure(g, subgroup | cyclic_subgroup)
                if joined not in found:
                    found[joined] = None
                    next_frontier.append(joined)
        frontier = next_frontier
    return sorted(found, key=_subgroup_key)


def describe_subgroup(g: FiniteGroup, h: Subgroup) -> str:
    """
    Short label from a greedy generating set in cycle notation.
    """
    if h.order == 1:
        return "1"
    if h.order == g.order:
        return "G"
    generators: list[int] = []
    generated = frozenset({0})
    for element in h.element_indices:
        if element not in generated:
            generators.append(element)
            generated = closure(g, set(generators))
    texts = []
    for element in generators:
        cycles = SympyPermutation(list(g.elements[element].images)).cyclic_form
        texts.append("".join("(" + " ".join(str(point) for point in cycle) + ")" for cycle in cycles))
    return "<" + ", ".join(texts) + ">"


def _weyl_group(g: FiniteGroup, class_index: int, h: frozenset[int], normalizer: frozenset[int]) -> WeylGroup:
    def canonical(element: int) -> int:
        return min(g.mul(element, member) for member in h)

    cosets = tuple(sorted({canonical(element) for element in normalizer}))
    position = {representative: index for index, representative in enumerate(cosets)}
    table = tuple(
        tuple(position[canonical(g.mul(left, right))] for right in cosets)
        for left in cosets
    )
    return WeylGroup(class_index=class_index, cosets=cosets, table=table)


def build_lattice(g: FiniteGroup, cap: int | None = None) -> SubgroupLattice:
    """
    Enumerate all subgroups of `g` and organise them by conjugacy.

    Args:
        g: The group
        cap: Largest admissible order, defaults to settings.GROUP_ORDER_CAP

    Returns:
        SubgroupLattice: Subgroups, classes, subconjugacy order, normalizers and Weyl groups

    Raises:
        ComputationError: Order above the cap
    """
    subgroup_sets = enumerate_subgroups(g, cap)
    index_of = {members: index for index, members in enumerate(subgroup_sets)}

    conjugates: list[frozenset[int]] = []
    normalizers: list[Subgroup] = []
    for members in subgroup_sets:
        orbit = set()
        normalizer = []
        for element in range(g.order):
            conjugate = _conjugate_set(g, members, element)
            orbit.add(index_of[conjugate])
            if conjugate == members:
                normalizer.append(element)
        conjugates.append(frozenset(orbit))
        normalizers.append(Subgroup(tuple(normalizer)))

    class_members = sorted(
        set(conjugates),
        key=lambda orbit: _subgroup_key(subgroup_sets[min(orbit)]),
    )
    classes = []
    class_of = [0] * len(subgroup_sets)
    for class_index, orbit in enumerate(class_members):
        members = tuple(sorted(orbit))
        classes.append(ConjugacyClass(index=class_index, members=members, representative=members[0]))
        for member in members:
            class_of[member] = class_index

    subconjugacy = tuple(
        tuple(
            any(subgroup_sets[member] <= subgroup_sets[upper.representative] for member in lower.members)
            for upper in classes
        )
        for lower in classes
    )

    weyl = tuple(
        _weyl_group(
            g,
            conjugacy_class.index,
            subgroup_sets[conjugacy_class.representative],
            normalizers[conjugacy_class.representative].members,
        )
        for conjugacy_class in classes
    )
    for conjugacy_class, weyl_group in zip(classes, weyl):
        representative = subgroup_sets[conjugacy_class.representative]
        if weyl_group.order * len(representative) != normalizers[conjugacy_class.representative].order:
            raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=f"Weyl order of class {conjugacy_class.index}")

    subgroups = tuple(Subgroup(tuple(sorted(members))) for members in subgroup_sets)
    labels = tuple(describe_subgroup(g, subgroups[conjugacy_class.representative]) for conjugacy_class in classes)
    log.debug(f"Lattice of {g.name}: {len(subgroups)} subgroups in {len(classes)} classes")
    return SubgroupLattice(
        group=g,
        subgroups=subgroups,
        classes=tuple(classes),
        class_of=tuple(class_of),
        subconjugacy=subconjugacy,
        normalizers=tuple(normalizers),
        weyl=weyl,
        labels=labels,
    )


def longest_chain_length(lat: SubgroupLattice) -> int:
    """
    Number of subgroups in the longest strictly increasing chain 1 < H1 < ... < G.
    """
    length = [1] * lat.class_count
    for upper in range(lat.class_count):
        for lower in range(upper):
            if lat.is_subconjugate(lower, upper) and lat.class_order(lower) < lat.class_order(upper):
                length[upper] = max(length[upper], length[lower] + 1)
    return max(length)


def coset_space(g: FiniteGroup, h: Subgroup, label: str | None = None) -> GSet:
    """
    Left cosets G/H with the translation action.

    Cosets are represented by their minimal element index; points are sorted
    by that representative.

    Raises:
        ComputationError: h is not a subgroup of g
    """
    h = make_subgroup(g, h.element_indices)

    def canonical(element: int) -> int:
        return min(g.mul(element, member) for member in h.element_indices)

    points = tuple(sorted({canonical(element) for element in range(g.order)}))
    position = {representative: index for index, representative in enumerate(points)}
    element_action = tuple(
        Permutation(tuple(position[canonical(g.mul(element, representative))] for representative in points))
        for element in range(g.order)
    )
    action = tuple(element_action[generator] for generator in g.generator_indices)

    for generator, generator_action in zip(g.generator_indices, action):
        for element in range(g.order):
            if element_action[g.mul(generator, element)] != generator_action * element_action[element]:
                raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value="coset action is not a group action")

    return GSet(
        size=len(points),
        action=action,
        element_action=element_action,
        points=points,
        label=label or f"G/H({h.order})",
    )


def fixed_points(x: GSet, h: Subgroup) -> tuple[int, ...]:
    """Points of `x` fixed by every element of `h`, in increasing order."""
    return tuple(
        point for point in range(x.size)
        if all(x.element_action[element].fixes(point) for element in h.element_indices)
    )


def orbit_count(x: GSet, h: Subgroup) -> int:
    """Number of h-orbits on x."""
    restricted = PermutationGroup([
        SympyPermutation(list(x.element_action[element].images)) for element in h.element_indices
    ])
    return len(restricted.orbits())


def burnside_count(x: GSet, h: Subgroup) -> int:
    """Orbit count by averaging fixed points over the elements of h."""
    fixed_total = sum(
        sum(1 for point in range(x.size) if x.element_action[element].fixes(point))
        for element in h.element_indices
    )
    return fixed_total // h.order


def brute_force_subgroups(g: FiniteGroup) -> set[frozenset[int]]:
    """
    Closure of every subset of the non-identity elements.

    Only usable for very small groups; serves as an independent check of
    `enumerate_subgroups`.
    """
    found: set[frozenset[int]] = set()
    non_identity = range(1, g.order)
    for size in range(g.order):
        for subset in combinations(non_identity, size):
            found.add(closure(g, set(subset)))
    return found
