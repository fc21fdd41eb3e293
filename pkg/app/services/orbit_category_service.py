"""
Reduced canonical orbit category.

Objects are the conjugacy classes of the lattice. A morphism G/H_i -> G/H_j is
a G-map, determined by the image gH_j of the base coset, which must be fixed by
H_i; so Hom(i, j) is the fixed-point set (G/H_j)^(H_i).
"""
from app.core.exceptions import ComputationError
from app.core.logger import log
from app.models.category import Morphism, OrbitCategory
from app.models.group import SubgroupLattice
from app.services.constant.response_constant import (
    INTERNAL_CONSISTENCY_ERROR,
    NON_COMPOSABLE_MORPHISMS_ERROR,
)
from app.services.group_service import coset_space, fixed_points


def build_orbit_category(lat: SubgroupLattice) -> OrbitCategory:
    """
    Enumerate hom-sets through fixed points and tabulate composition.

    The composite of g: i -> j (representative a) and f: j -> k
    (representative b) sends the base coset to abH_k, so its representative
    is the minimal element of abH_k.

    Args:
        lat: Fully built subgroup lattice

    Returns:
        OrbitCategory: Category with a composition table checked for associativity

    Raises:
        ComputationError: Internal consistency failure
    """
    g = lat.group
    objects = tuple(range(lat.class_count))
    spaces = [coset_space(g, lat.representative(obj), label=f"G/{lat.label(obj)}") for obj in objects]
    canonical = [
        tuple(min(g.mul(element, member) for member in lat.representative(obj).element_indices)
              for element in range(g.order))
        for obj in objects
    ]

    morphisms: list[Morphism] = []
    lookup: dict[tuple[int, int, int], int] = {}
    hom_sets = []
    for source in objects:
        row = []
        for target in objects:
            space = spaces[target]
            indices = []
            for point in fixed_points(space, lat.representative(source)):
                morphism = Morphism(
                    index=len(morphisms),
                    source=source,
                    target=target,
                    representative=space.points[point],
                )
                morphisms.append(morphism)
                lookup[(source, target, morphism.representative)] = morphism.index
                indices.append(morphism.index)
            row.append(tuple(indices))
        hom_sets.append(tuple(row))

    composition: dict[tuple[int, int], int] = {}
    for first in morphisms:
        for second_index in outgoing(hom_sets, first.target):
            second = morphisms[second_index]
            representative = canonical[second.target][g.mul(first.representative, second.representative)]
            key = (first.source, second.target, representative)
            if key not in lookup:
                raise ComputationError(
                    INTERNAL_CONSISTENCY_ERROR,
                    value=f"composite of morphisms {second.index} and {first.index} is not a G-map",
                )
            composition[(second.index, first.index)] = lookup[key]

    identities = tuple(lookup[(obj, obj, 0)] for obj in objects)
    category = OrbitCategory(
        lattice=lat,
        objects=objects,
        morphisms=tuple(morphisms),
        hom_sets=tuple(hom_sets),
        composition=composition,
        identities=identities,
    )
    _verify_category(category)
    log.debug(f"Orbit category of {g.name}: {len(objects)} objects, {len(morphisms)} morphisms")
    return category


def outgoing(hom_sets, source: int) -> list[int]:
    """Indices of every morphism leaving `source`."""
    return [index for hom_set in hom_sets[source] for index in hom_set]


def _verify_category(category: OrbitCategory) -> None:
    for morphism in category.morphisms:
        if category.composition[(morphism.index, category.identities[morphism.source])] != morphism.index:
            raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=f"right identity on {morphism.index}")
        if category.composition[(category.identities[morphism.target], morphism.index)] != morphism.index:
            raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=f"left identity on {morphism.index}")

    for h in category.morphisms:
        for g_index in outgoing(category.hom_sets, h.target):
            g = category.morphisms[g_index]
            g_after_h = category.composition[(g.index, h.index)]
            for f_index in outgoing(category.hom_sets, g.target):
                left = category.composition[(f_index, g_after_h)]
                right = category.composition[(category.composition[(f_index, g.index)], h.index)]
                if left != right:
                    raise ComputationError(
                        INTERNAL_CONSISTENCY_ERROR,
                        value=f"composition is not associative on ({f_index}, {g.index}, {h.index})",
                    )


def compose(cat: OrbitCategory, f: int, g: int) -> int:
    """
    Index of f . g (first g, then f).

    Raises:
        ComputationError: The target of g is not the source of f
    """
    if cat.morphism(g).target != cat.morphism(f).source:
        raise ComputationError(NON_COMPOSABLE_MORPHISMS_ERROR, value=[f, g])
    return cat.composition[(f, g)]


def category_algebra_dimension(cat: OrbitCategory) -> int:
    """Dimension of the rational category algebra, i.e. the number of morphisms."""
    return cat.morphism_count


def export_quiver_dot(cat: OrbitCategory) -> str:
    """
    DOT digraph of the category.

    One node per object labelled by its subgroup and the number of
    non-identity endomorphisms, one edge per morphism between distinct objects.
    """
    lines = ["digraph G {"]
    for obj in cat.objects:
        loops = len(cat.endomorphisms(obj)) - 1
        lines.append(f'  "{obj}" [label="{obj}: {cat.label(obj)}\\nloops={loops}"];')
    for morphism in cat.morphisms:
        if morphism.source != morphism.target:
            lines.append(f'  "{morphism.source}" -> "{morphism.target}" [label="{morphism.representative}"];')
    for obj in cat.objects:
        if len(cat.endomorphisms(obj)) > 1:
            lines.append(f'  "{obj}" -> "{obj}" [label="|W|-1={len(cat.endomorphisms(obj)) - 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_lattice_dot(lat: SubgroupLattice) -> str:
    """Hasse diagram of the subconjugacy order on classes."""
    lines = ["digraph G {"]
    for obj in range(lat.class_count):
        lines.append(f'  "{obj}" [label="{obj}: {lat.label(obj)} |H|={lat.class_order(obj)}"];')
    for lower in range(lat.class_count):
        for upper in range(lat.class_count):
            if lower == upper or not lat.is_subconjugate(lower, upper):
                continue
            covered = any(
                lat.is_subconjugate(lower, middle) and lat.is_subconjugate(middle, upper)
                for middle in range(lat.class_count)
                if middle not in (lower, upper)
            )
            if not covered:
                lines.append(f'  "{lower}" -> "{upper}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
