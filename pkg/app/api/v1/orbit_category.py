from fastapi import APIRouter, Depends

from app.api.dependencies import get_orbit_category
from app.models.category import OrbitCategory
from app.schemas.category import OrbitCategorySchema
from app.services.report_service import category_report

router = APIRouter(
    responses={
        400: {"description": "Unknown group descriptor or order above the cap"}
    }
)


@router.get(
    "",
    response_model=OrbitCategorySchema,
    summary="Reduced orbit category",
    description="Objects, hom-set sizes, morphism representatives and the composition table"
)
def get_orbit_category_report(category: OrbitCategory = Depends(get_orbit_category)) -> OrbitCategorySchema:
    return category_report(category)
