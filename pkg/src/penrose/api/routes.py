"""FastAPI routes for the penrose API."""

import asyncio
from functools import partial
from typing import Callable, TypeVar

from fastapi import APIRouter, HTTPException

from ..config import logger
from ..decomposition.invariant import blockwise_rgi, char_conditions, check_invariance
from ..errors import DimensionError, ParseError, PenroseError
from ..linalg.matrix import Matrix
from ..linalg.pseudoinverse import mp_inverse, mp_inverse_geometric, verify_penrose
from ..models import (
    ApplyRequest,
    BlockOperatorDocument,
    CheckReport,
    CheckRequest,
    MatrixDocument,
    OperatorDocument,
    OperatorPayload,
    PotencyReport,
    SolveReportModel,
    SolveRequest,
    VectorDocument,
    VerifyReport,
    VerifyRequest,
)
from ..operators import block_operator
from ..operators.block_operator import BlockOperator
from ..solver.system_solver import solve, solve_dense
from ..utils.serialization import (
    decomposition_from_document,
    matrix_from_document,
    matrix_to_document,
    operator_from_document,
    operator_to_document,
    solve_report_model,
    vector_from_document,
    vector_to_document,
)

router = APIRouter()

T = TypeVar("T")


async def run_blocking(func: Callable[..., T], *args) -> T:
    """Run exact arithmetic in the default executor and map domain errors to HTTP."""
    loop = asyncio.get_running_loop()
    try:
        return await loop.run_in_executor(None, partial(func, *args))
    except ParseError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except PenroseError as e:
        logger.error(f"Request failed: {e}", exc_info=True)
        raise HTTPException(status_code=400, detail=str(e))


def _operator(document: OperatorDocument) -> Matrix | BlockOperator:
    if isinstance(document, MatrixDocument):
        return matrix_from_document(document)
    return operator_from_document(document)


def _pinv(document: OperatorDocument) -> MatrixDocument | BlockOperatorDocument:
    source = _operator(document)
    if isinstance(source, Matrix):
        return matrix_to_document(mp_inverse(source))
    return operator_to_document(block_operator.mp_inverse(source))


def _apply(request: ApplyRequest) -> VectorDocument:
    source = _operator(request.operator)
    vector = vector_from_document(request.vector)
    if isinstance(source, Matrix):
        if vector.max_index > source.cols:
            raise DimensionError(f"vector index {vector.max_index} exceeds {source.cols} columns")
        return vector_to_document(source.apply_sparse(vector))
    return vector_to_document(block_operator.apply(source, vector))


def _solve(request: SolveRequest) -> SolveReportModel:
    source = _operator(request.operator)
    rhs = vector_from_document(request.rhs)
    if isinstance(source, Matrix):
        return solve_report_model(solve_dense(source, rhs))
    return solve_report_model(solve(source, rhs))


def _check(request: CheckRequest) -> CheckReport:
    source = _operator(request.matrix)
    if isinstance(source, BlockOperator):
        source = block_operator.truncate(source, 0)
    decomposition, gram = decomposition_from_document(request.decomposition)
    if not check_invariance(source, decomposition):
        return CheckReport(invariant=False, message="decomposition is not invariant under the map")
    conditions = char_conditions(source, decomposition, gram)
    return CheckReport(
        invariant=True,
        image_condition=conditions.image_condition,
        kernel_condition=conditions.kernel_condition,
        rgi_equals_mp=blockwise_rgi(source, decomposition, gram)
        == mp_inverse_geometric(source, gram, gram),
    )


def _verify(request: VerifyRequest) -> VerifyReport:
    conditions = verify_penrose(
        matrix_from_document(request.matrix), matrix_from_document(request.candidate)
    )
    return VerifyReport(
        **conditions._asdict(),
        reflexive=conditions.reflexive,
        moore_penrose=conditions.moore_penrose,
    )


def _potent(document: BlockOperatorDocument) -> PotencyReport:
    op = operator_from_document(document)
    return PotencyReport(
        finite_potent=block_operator.is_finite_potent(op),
        nilpotency_index=block_operator.nilpotency_index(op),
    )


@router.post("/pinv")
async def pinv(payload: OperatorPayload) -> MatrixDocument | BlockOperatorDocument:
    """Moore-Penrose inverse of a matrix or block operator, in the same format."""
    logger.info(f"pinv request for a {payload.root.kind} document")
    return await run_blocking(_pinv, payload.root)


@router.post("/apply", response_model=VectorDocument)
async def apply(request: ApplyRequest) -> VectorDocument:
    return await run_blocking(_apply, request)


@router.post("/solve", response_model=SolveReportModel, response_model_exclude_none=True)
async def solve_system(request: SolveRequest) -> SolveReportModel:
    """Minimal least-norm solution, residual and kernel pattern."""
    return await run_blocking(_solve, request)


@router.post("/check", response_model=CheckReport)
async def check(request: CheckRequest) -> CheckReport:
    return await run_blocking(_check, request)


@router.post("/verify", response_model=VerifyReport)
async def verify(request: VerifyRequest) -> VerifyReport:
    return await run_blocking(_verify, request)


@router.post("/potent", response_model=PotencyReport)
async def potent(document: BlockOperatorDocument) -> PotencyReport:
    return await run_blocking(_potent, document)


@router.get("/health")
async def health_check() -> dict:
    """Health check endpoint."""
    return {"status": "healthy", "service": "penrose"}
