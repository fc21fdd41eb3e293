from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_decomposition, get_orbit_category
from app.models.category import OrbitCategory
from app.models.pipeline import DecompositionTable
from app.schemas.pipeline import CohomologySchema
from app.services.descriptor_service import load_coefficient
from app.services.pipeline_service import cohomology_table, e2_page
from app.services.report_service import cohomology_report

router = APIRouter(
    responses={
        400: {"description": "Invalid descriptor or representation outside the strict-drop hypothesis"}
    }
)


@router.get(
    "",
    response_model=CohomologySchema,
    summary="Cohomology table",
    description="Ranks of H^n_G(Conf(V, q); M) per total degree, read off both E2 tables"
)
def get_cohomology(
        group: str = Query("D8"),
        coefficient: str = Query("atom:0"),
        points: int = Query(3, ge=1),
        representation: str = Query("regular"),
        category: OrbitCategory = Depends(get_orbit_category),
        table: DecompositionTable = Depends(get_decomposition)
) -> CohomologySchema:
    """
    Get the cohomology table of Conf(V, q) with coefficients in M.

    Returns:
        CohomologySchema: One row per total degree; upper_bound marks degrees a differential may change
    """
    page = e2_page(category, table, load_coefficient(category, coefficient, points, representation))
    return cohomology_report(page, cohomology_table(page), table.representation.label, group)
