from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_decomposition, get_orbit_category
from app.models.category import OrbitCategory
from app.models.pipeline import DecompositionTable
from app.schemas.pipeline import E2PageSchema
from app.services.descriptor_service import load_coefficient
from app.services.pipeline_service import e2_page
from app.services.report_service import e2_report

router = APIRouter(
    responses={
        400: {"description": "Invalid descriptor or representation outside the strict-drop hypothesis"}
    }
)


@router.get(
    "",
    response_model=E2PageSchema,
    summary="E2 page",
    description="Ext and Hom-complex cells of the universal coefficient spectral sequence"
)
def get_e2_page(
        group: str = Query("D8"),
        coefficient: str = Query("atom:0"),
        points: int = Query(3, ge=1),
        representation: str = Query("regular"),
        category: OrbitCategory = Depends(get_orbit_category),
        table: DecompositionTable = Depends(get_decomposition)
) -> E2PageSchema:
    m = load_coefficient(category, coefficient, points, representation)
    return e2_report(e2_page(category, table, m), group)
