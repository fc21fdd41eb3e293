from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_orbit_category
from app.models.category import OrbitCategory
from app.schemas.homology import ResolutionSchema
from app.services.descriptor_service import load_coefficient
from app.services.homology_service import injective_resolution
from app.services.report_service import resolution_report

router = APIRouter(
    responses={
        400: {"description": "Invalid coefficient descriptor"}
    }
)


@router.get(
    "",
    response_model=ResolutionSchema,
    summary="Injective resolution",
    description="Minimal injective resolution of a coefficient system, term dimensions and maps"
)
def get_resolution(
        coefficient: str = Query("atom:0", description="Coefficient system descriptor"),
        points: int = Query(3, ge=1, description="q, used by homology:<n>"),
        representation: str = Query("regular", description="V, used by homology:<n>"),
        category: OrbitCategory = Depends(get_orbit_category)
) -> ResolutionSchema:
    """
    Get an injective resolution.

    Args:
        coefficient: System to resolve
        points: Number of points for homology descriptors
        representation: Representation for homology descriptors
        category: Orbit category dependency

    Returns:
        ResolutionSchema: Terms, augmentation and differentials
    """
    m = load_coefficient(category, coefficient, points, representation)
    return resolution_report(injective_resolution(m))
