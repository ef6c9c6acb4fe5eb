from typing import Any, Dict

import numpy as np
from fastapi import APIRouter, Body, HTTPException

from app.core.suirrep import ReprTriple, commutant_basis, complex_irrep, complex_pairs, decompose, real_irrep

from ..models import (
    CommutantRequest,
    CommutantResponse,
    DecomposeRequest,
    DecomposeResponse,
    IrrepRequest,
    IrrepResponse,
)
from ..tags import REPRESENTATION

router = APIRouter()


def _read_representation(payload: Dict[str, Any]) -> ReprTriple:
    try:
        return ReprTriple.from_dict(payload)
    except (KeyError, TypeError, ValueError) as error:
        raise HTTPException(status_code=400, detail=f"Malformed representation: {error}") from error


@router.post("/irrep", tags=[REPRESENTATION])
def irreducible_representation(
    request: IrrepRequest = Body(...),
) -> IrrepResponse:
    """
    Generators of the irreducible representation of the given dimension
    """
    rep = real_irrep(request.dim) if request.real else complex_irrep(request.dim)
    return IrrepResponse(
        message=f"Successfully built the {'real' if request.real else 'complex'} irreducible of dimension {rep.dim}",
        representation=rep.to_dict(),
        casimir=float(np.real(np.trace(rep.casimir())) / rep.dim),
    )


@router.post("/decompose", tags=[REPRESENTATION])
def decompose_representation(
    request: DecomposeRequest = Body(...),
) -> DecomposeResponse:
    """
    Split a representation into its irreducible summands
    """
    decomposition = decompose(_read_representation(request.representation))
    return DecomposeResponse(
        message="Successfully decomposed representation",
        summands=list(decomposition.summands),
        multiplicities=decomposition.multiplicities(),
    )


@router.post("/commutant", tags=[REPRESENTATION])
def commutant(
    request: CommutantRequest = Body(...),
) -> CommutantResponse:
    """
    Basis of the matrices commuting with a representation
    """
    basis = commutant_basis(_read_representation(request.representation))
    return CommutantResponse(
        message="Successfully computed commutant",
        basis=[complex_pairs(matrix) for matrix in basis],
        dimension=len(basis),
    )
