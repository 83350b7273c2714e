"""Pydantic models for penrose input files and reports."""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field, PositiveInt, RootModel, TypeAdapter, model_validator


# Scalars travel as exact text ("a/b" or "a/b+c/d*i"), never as JSON numbers
ScalarText = str
MatrixRows = list[list[ScalarText]]
VectorEntry = tuple[PositiveInt, ScalarText]
VectorEntries = list[VectorEntry]


# =============================================================================
# Input documents
# =============================================================================


class MatrixDocument(BaseModel):
    """A dense finite matrix, row by row."""
    kind: Literal["matrix"] = "matrix"
    note: Optional[str] = None
    rows: MatrixRows


class BlockOperatorDocument(BaseModel):
    """Head blocks on the leading coordinates, then one tail block repeated forever."""
    kind: Literal["block_operator"] = "block_operator"
    note: Optional[str] = None
    head_blocks: list[MatrixRows] = Field(default_factory=list)
    tail_block: MatrixRows


class VectorDocument(BaseModel):
    """A finitely supported vector as [index, scalar] pairs, indices 1-based."""
    kind: Literal["vector"] = "vector"
    note: Optional[str] = None
    entries: VectorEntries = Field(default_factory=list)


class DecompositionDocument(BaseModel):
    """Parts H₁, …, Hₙ, each a list of basis vectors, plus an optional Gram matrix."""
    kind: Literal["decomposition"] = "decomposition"
    note: Optional[str] = None
    ambient_dim: PositiveInt
    parts: list[list[VectorEntries]]
    gram: Optional[MatrixRows] = None


OperatorDocument = Annotated[
    Union[MatrixDocument, BlockOperatorDocument], Field(discriminator="kind")
]


class SystemDocument(BaseModel):
    """A right-hand side together with an operator, inline or by file reference."""
    kind: Literal["system"] = "system"
    note: Optional[str] = None
    operator_file: Optional[str] = None  # relative to the system file
    operator: Optional[OperatorDocument] = None
    rhs: VectorEntries = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_operator(self) -> "SystemDocument":
        if (self.operator is None) == (self.operator_file is None):
            raise ValueError("exactly one of operator and operator_file is required")
        return self


Document = Annotated[
    Union[
        MatrixDocument,
        BlockOperatorDocument,
        VectorDocument,
        DecompositionDocument,
        SystemDocument,
    ],
    Field(discriminator="kind"),
]

document_adapter: TypeAdapter[Document] = TypeAdapter(Document)


# =============================================================================
# Reports
# =============================================================================


class SubspacePatternModel(BaseModel):
    """A per-block subspace: head pieces in absolute coordinates, tail piece local."""
    head: list[VectorEntries] = Field(default_factory=list)
    tail: list[VectorEntries] = Field(default_factory=list)
    tail_start: int  # coordinates before the first tail copy
    tail_size: int


class SolveReportModel(BaseModel):
    kind: Literal["solve_report"] = "solve_report"
    consistent: bool
    min_solution: VectorEntries
    residual_norm_sq: ScalarText
    kernel: Optional[SubspacePatternModel] = None
    kernel_basis: Optional[list[VectorEntries]] = None  # finite systems


class CheckReport(BaseModel):
    kind: Literal["check_report"] = "check_report"
    invariant: bool
    image_condition: Optional[bool] = None
    kernel_condition: Optional[bool] = None
    rgi_equals_mp: Optional[bool] = None
    message: Optional[str] = None


class VerifyReport(BaseModel):
    kind: Literal["verify_report"] = "verify_report"
    axa: bool
    xax: bool
    ax_self_adjoint: bool
    xa_self_adjoint: bool
    reflexive: bool
    moore_penrose: bool


class PotencyReport(BaseModel):
    kind: Literal["potency_report"] = "potency_report"
    finite_potent: bool
    nilpotency_index: Optional[int] = None


# =============================================================================
# API request bodies
# =============================================================================


class OperatorPayload(RootModel[OperatorDocument]):
    """A bare matrix or block operator document as a request body."""


class ApplyRequest(BaseModel):
    operator: OperatorDocument
    vector: VectorDocument


class SolveRequest(BaseModel):
    operator: OperatorDocument
    rhs: VectorDocument


class CheckRequest(BaseModel):
    matrix: OperatorDocument
    decomposition: DecompositionDocument


class VerifyRequest(BaseModel):
    matrix: MatrixDocument
    candidate: MatrixDocument
