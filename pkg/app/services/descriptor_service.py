"""
Descriptors shared by the command line and the HTTP API.

Groups are loaded once per process and their lattices and orbit categories
memoised, so every command over the same group sees the same category object.
"""
import re
from functools import lru_cache

from app.core.exceptions import ComputationError
from app.core.settings import settings
from app.models.category import OrbitCategory
from app.models.coefficient import CoefficientSystem
from app.models.group import SubgroupLattice
from app.models.pipeline import DecompositionTable, GRepresentation
from app.services.coefficient_service import (
    atom_1h,
    constant_q,
    injective_ivh,
    regular_weyl_module,
    trivial_weyl_module,
    zero_system,
)
from app.services.constant.response_constant import (
    INVALID_COEFFICIENT_DESCRIPTOR_ERROR,
    INVALID_REPRESENTATION_DESCRIPTOR_ERROR,
)
from app.services.group_service import build_lattice, make_named_group
from app.services.orbit_category_service import build_orbit_category
from app.services.pipeline_service import (
    decompose_homology,
    make_representation,
    realize_system,
    regular_representation,
)

INDEXED_COEFFICIENT_REGEX = re.compile(r"^(?P<kind>atom|injective|regular-injective|homology):(?P<index>\d+)$")
FREE_REPRESENTATION_REGEX = re.compile(r"^free:(?P<copies>\d+)$")
ORBIT_SUMMAND_REGEX = re.compile(r"^(?P<class_index>\d+)x(?P<multiplicity>\d+)$")


@lru_cache(maxsize=settings.CATEGORY_CACHE_SIZE)
def load_lattice(group: str) -> SubgroupLattice:
    return build_lattice(make_named_group(group))


@lru_cache(maxsize=settings.CATEGORY_CACHE_SIZE)
def load_orbit_category(group: str) -> OrbitCategory:
    return build_orbit_category(load_lattice(group))


def parse_representation(lat: SubgroupLattice, descriptor: str) -> GRepresentation:
    """
    Parse "regular", "free:<s>" or "orbits:<k>x<m>,<k>x<m>,...".

    Raises:
        ComputationError: Unparseable descriptor, or an invalid summand
    """
    text = descriptor.strip()
    if text == "regular":
        return regular_representation(lat)

    free = FREE_REPRESENTATION_REGEX.match(text)
    if free:
        copies = int(free.group("copies"))
        if copies < 1:
            raise ComputationError(INVALID_REPRESENTATION_DESCRIPTOR_ERROR, value=descriptor)
        return regular_representation(lat, copies)

    if text.startswith("orbits:"):
        summands = []
        for part in text.removeprefix("orbits:").split(","):
            summand = ORBIT_SUMMAND_REGEX.match(part.strip())
            if not summand:
                raise ComputationError(INVALID_REPRESENTATION_DESCRIPTOR_ERROR, value=descriptor)
            summands.append((int(summand.group("class_index")), int(summand.group("multiplicity"))))
        return make_representation(lat, summands, label=text)

    raise ComputationError(INVALID_REPRESENTATION_DESCRIPTOR_ERROR, value=descriptor)


def parse_coefficient(
    cat: OrbitCategory,
    descriptor: str,
    table: DecompositionTable | None = None,
) -> CoefficientSystem:
    """
    Parse a coefficient system descriptor.

    Args:
        cat: Orbit category the system lives on
        descriptor: "constQ", "zero", "atom:<i>", "injective:<i>",
            "regular-injective:<i>" or "homology:<n>"
        table: Decomposition table, needed by "homology:<n>"

    Raises:
        ComputationError: Unparseable descriptor, unknown class, or "homology:<n>" without a table
    """
    text = descriptor.strip()
    if text == "constQ":
        return constant_q(cat)
    if text == "zero":
        return zero_system(cat)

    indexed = INDEXED_COEFFICIENT_REGEX.match(text)
    if not indexed:
        raise ComputationError(INVALID_COEFFICIENT_DESCRIPTOR_ERROR, value=descriptor)
    kind, index = indexed.group("kind"), int(indexed.group("index"))
    match kind:
        case "atom":
            return atom_1h(cat, index)
        case "injective":
            return injective_ivh(cat, index, trivial_weyl_module(cat, index))
        case "regular-injective":
            return injective_ivh(cat, index, regular_weyl_module(cat, index))
        case _:
            if table is None:
                raise ComputationError(INVALID_COEFFICIENT_DESCRIPTOR_ERROR, value=f"{descriptor} needs a point count")
            return realize_system(cat, table, index)


def load_coefficient(
    cat: OrbitCategory,
    descriptor: str,
    points: int = 3,
    representation: str = "regular",
) -> CoefficientSystem:
    """
    Parse a coefficient descriptor, decomposing Conf(V, q) first when it names a homology system.
    """
    table = None
    if descriptor.strip().startswith("homology:"):
        lat = cat.lattice
        table = decompose_homology(lat, parse_representation(lat, representation), points)
    return parse_coefficient(cat, descriptor, table)
