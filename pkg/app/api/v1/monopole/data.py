from fastapi import APIRouter, Body

from app.core.adhm import validate
from app.core.symmetry import AnsatzSpec, build_family, structure_ansatz, structure_group_bounds

from ..models import (
    AnsatzRequest,
    AnsatzResponse,
    FamilyRequest,
    FamilyResponse,
    ResponseStatus,
    StructureGroupRequest,
    StructureGroupResponse,
    VerifyRequest,
    VerifyResponse,
)
from ..tags import DATA

router = APIRouter()


@router.post("/family", tags=[DATA])
def family(
    request: FamilyRequest = Body(...),
) -> FamilyResponse:
    """
    Construct and validate a member of a named family
    """
    instance = build_family(request.name, request.params)
    return FamilyResponse(
        message=f"Successfully constructed {request.name.value} data",
        instance=instance.to_dict(),
    )


@router.post("/ansatz", tags=[DATA])
def ansatz(
    request: AnsatzRequest = Body(...),
) -> AnsatzResponse:
    """
    Spherically symmetric M for the given irreducible summands
    """
    result = structure_ansatz(AnsatzSpec(tuple(request.summands), request.params))
    return AnsatzResponse(
        message=f"Successfully built ansatz with {len(result.labels)} parameters",
        ansatz=result.to_dict(),
    )


@router.post("/verify", tags=[DATA])
def verify(
    request: VerifyRequest = Body(...),
) -> VerifyResponse:
    """
    Check the conditions for data to define a monopole
    """
    report = validate(request.to_adhm(), request.domain, request.samples)
    if report.valid:
        return VerifyResponse(message="Data is valid", valid=True, report=report.to_dict())
    return VerifyResponse(
        status=ResponseStatus.FAIL,
        message="Data is invalid",
        details=f"smallest Δ†Δ eigenvalue {report.delta_min_eig_over_domain:.3e} at {list(report.worst_point)}",
        valid=False,
        report=report.to_dict(),
    )


@router.post("/structure-group", tags=[DATA])
def structure_group(
    request: StructureGroupRequest = Body(...),
) -> StructureGroupResponse:
    """
    Bounds on the rank of the structure group for the given summands
    """
    bounds = structure_group_bounds(request.summands, seed=request.seed)
    return StructureGroupResponse(
        message="Successfully bounded structure group",
        bounds=bounds.to_dict(),
    )
