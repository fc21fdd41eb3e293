from fastapi import APIRouter, Depends

from app.api.dependencies import get_lattice
from app.models.group import SubgroupLattice
from app.schemas.group import LatticeSchema
from app.services.report_service import lattice_report

router = APIRouter(
    responses={
        400: {"description": "Unknown group descriptor or order above the cap"}
    }
)


@router.get(
    "",
    response_model=LatticeSchema,
    summary="Subgroup lattice",
    description="Every subgroup of the group with its conjugacy classes in canonical order"
)
def get_lattice_report(lattice: SubgroupLattice = Depends(get_lattice)) -> LatticeSchema:
    """
    Get the subgroup lattice of a group.

    Classes are ordered by subgroup order then lexicographically, so class 0
    is the trivial subgroup and the last class the whole group.

    Args:
        lattice: Lattice dependency

    Returns:
        LatticeSchema: Subgroups, classes, normalizer and Weyl orders
    """
    return lattice_report(lattice)
