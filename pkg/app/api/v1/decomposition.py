from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_decomposition
from app.models.pipeline import DecompositionTable
from app.schemas.pipeline import DecompositionSchema
from app.services.report_service import decomposition_report

router = APIRouter(
    responses={
        400: {"description": "Invalid descriptor or representation outside the strict-drop hypothesis"}
    }
)


@router.get(
    "",
    response_model=DecompositionSchema,
    summary="Homology coefficient systems of Conf(V, q)",
    description="Constant and atom multiplicities of every nonzero homology degree"
)
def get_decomposition_report(
        group: str = Query("D8"),
        table: DecompositionTable = Depends(get_decomposition)
) -> DecompositionSchema:
    return decomposition_report(table, group)
