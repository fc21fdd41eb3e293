from fastapi import Depends, Query

from app.models.category import OrbitCategory
from app.models.group import SubgroupLattice
from app.models.pipeline import DecompositionTable
from app.services.descriptor_service import load_lattice, load_orbit_category, parse_representation
from app.services.pipeline_service import decompose_homology


def get_lattice(
        group: str = Query("D8", description="C<n>, D<2n>, S<n>, A<n>, Q8 or perm:<degree>:<cycles;...>")
) -> SubgroupLattice:
    """
    Subgroup lattice dependency for FastAPI endpoints.

    Lattices are memoised per process, so repeated requests on the same group
    reuse the same lattice.

    Args:
        group: Group descriptor

    Returns:
        SubgroupLattice: Lattice of the group

    Raises:
        ComputationError: Unknown descriptor or order above the cap
    """
    return load_lattice(group)


def get_orbit_category(
        group: str = Query("D8", description="C<n>, D<2n>, S<n>, A<n>, Q8 or perm:<degree>:<cycles;...>")
) -> OrbitCategory:
    return load_orbit_category(group)


def get_decomposition(
        lattice: SubgroupLattice = Depends(get_lattice),
        points: int = Query(3, ge=1, description="Number of configuration points"),
        representation: str = Query("regular", description="regular, free:<s> or orbits:<k>x<m>,...")
) -> DecompositionTable:
    """
    Decomposition of the homology coefficient systems of Conf(V, q).

    Args:
        lattice: Lattice dependency
        points: q
        representation: Descriptor of V

    Returns:
        DecompositionTable: One row per nonzero homology degree
    """
    return decompose_homology(lattice, parse_representation(lattice, representation), points)
