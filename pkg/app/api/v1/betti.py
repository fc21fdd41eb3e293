from fastapi import APIRouter, Query

from app.schemas.configuration import BettiSchema
from app.services.configuration_service import betti
from app.services.report_service import betti_report

router = APIRouter()


@router.get(
    "",
    response_model=BettiSchema,
    summary="Betti numbers of a configuration space",
    description="Ranks of the rational cohomology of Conf(R^n, q)"
)
def get_betti(
        dimension: int = Query(2, ge=1, description="Dimension n of the ambient space"),
        points: int = Query(3, ge=1, description="Number of points q")
) -> BettiSchema:
    """
    Get the Betti numbers of Conf(R^n, q).

    Args:
        dimension: n
        points: q

    Returns:
        BettiSchema: Nonzero ranks by degree
    """
    return betti_report(betti(dimension, points))
