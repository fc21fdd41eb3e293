from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_orbit_category
from app.models.category import OrbitCategory
from app.schemas.homology import HomSchema
from app.services.descriptor_service import load_coefficient
from app.services.homology_service import hom_basis
from app.services.report_service import hom_report

router = APIRouter(
    responses={
        400: {"description": "Invalid coefficient descriptor"}
    }
)


@router.get(
    "",
    response_model=HomSchema,
    summary="Natural transformations",
    description="Dimension and canonical basis of Hom(source, coefficient)"
)
def get_hom(
        source: str = Query("constQ"),
        coefficient: str = Query("atom:0"),
        points: int = Query(3, ge=1),
        representation: str = Query("regular"),
        category: OrbitCategory = Depends(get_orbit_category)
) -> HomSchema:
    m = load_coefficient(category, source, points, representation)
    n = load_coefficient(category, coefficient, points, representation)
    return hom_report(hom_basis(m, n))
