from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_orbit_category
from app.models.category import OrbitCategory
from app.schemas.homology import ExtSchema
from app.services.descriptor_service import load_coefficient
from app.services.homology_service import ext_and_hom_complex, injective_resolution
from app.services.report_service import ext_report

router = APIRouter(
    responses={
        400: {"description": "Invalid coefficient descriptor"}
    }
)


@router.get(
    "",
    response_model=ExtSchema,
    summary="Ext groups",
    description="Ext^q(source, coefficient) with dim Hom(source, I^q) alongside"
)
def get_ext(
        source: str = Query("constQ"),
        coefficient: str = Query("atom:0"),
        points: int = Query(3, ge=1),
        representation: str = Query("regular"),
        category: OrbitCategory = Depends(get_orbit_category)
) -> ExtSchema:
    """
    Get the Ext dimensions of two coefficient systems.

    The second argument is resolved injectively.

    Returns:
        ExtSchema: Ext^q and the Hom-complex dimensions for q = 0 .. length
    """
    m = load_coefficient(category, source, points, representation)
    n = load_coefficient(category, coefficient, points, representation)
    ext, hom_complex = ext_and_hom_complex(m, injective_resolution(n))
    return ext_report(m, n, ext, hom_complex)
