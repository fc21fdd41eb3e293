from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_decomposition, get_orbit_category
from app.models.category import OrbitCategory
from app.models.pipeline import DecompositionTable
from app.schemas.pipeline import ConstantCohomologySchema
from app.services.pipeline_service import constant_q_cohomology
from app.services.report_service import constant_cohomology_report

router = APIRouter()


@router.get(
    "",
    response_model=ConstantCohomologySchema,
    summary="Cohomology with constant coefficients",
    description="Equivariant cohomology of Conf(V, q) with coefficients in the constant system"
)
def get_constant_cohomology(
        group: str = Query("D8"),
        category: OrbitCategory = Depends(get_orbit_category),
        table: DecompositionTable = Depends(get_decomposition)
) -> ConstantCohomologySchema:
    """
    Get H^n_G(Conf(V, q); Q) for every degree.

    Returns:
        ConstantCohomologySchema: Nonzero dimensions by degree
    """
    return constant_cohomology_report(table, constant_q_cohomology(category, table), group)
