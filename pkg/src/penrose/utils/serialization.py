"""Text forms for scalars, vectors, matrices and operators, and JSON document IO."""

import json
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel, ValidationError

from ..config import logger
from ..core.gram import GramForm
from ..core.scalar import Scalar
from ..core.vector import SparseVector
from ..decomposition.invariant import InvariantDecomposition
from ..errors import DimensionError, GramFormError, ParseError
from ..linalg.matrix import Matrix
from ..linalg.subspace import Subspace
from ..models import (
    BlockOperatorDocument,
    DecompositionDocument,
    Document,
    MatrixDocument,
    MatrixRows,
    SolveReportModel,
    SubspacePatternModel,
    VectorDocument,
    VectorEntries,
    document_adapter,
)
from ..operators.block_operator import BlockOperator, BlockSubspace
from ..solver.system_solver import DenseSolveReport, SolveReport


# =============================================================================
# Values <-> text forms
# =============================================================================


def scalar_from_text(text: str, location: str = "") -> Scalar:
    try:
        return Scalar.parse(text)
    except ParseError as e:
        raise ParseError(str(e), location) from None


def matrix_from_rows(rows: MatrixRows, location: str = "") -> Matrix:
    """Parse a row-major list of scalar strings; ragged or empty input is a parse error."""
    parsed = [
        [scalar_from_text(x, f"{location}[{i}][{j}]") for j, x in enumerate(row)]
        for i, row in enumerate(rows)
    ]
    try:
        return Matrix(parsed)
    except DimensionError as e:
        raise ParseError(str(e), location) from None


def matrix_to_rows(matrix: Matrix) -> MatrixRows:
    return [[str(x) for x in row] for row in matrix.to_lists()]


def vector_from_entries(entries: VectorEntries, location: str = "") -> SparseVector:
    return SparseVector.from_pairs(
        (index, scalar_from_text(text, f"{location}[{n}]"))
        for n, (index, text) in enumerate(entries)
    )


def vector_to_entries(vector: SparseVector) -> VectorEntries:
    return [(index, str(value)) for index, value in vector]


def format_vector(vector: SparseVector) -> str:
    """Human-readable form, e.g. ``{2: 1, 5: 1, 7: 1}``."""
    return "{" + ", ".join(f"{i}: {v}" for i, v in vector) + "}"


def format_matrix(matrix: Matrix) -> str:
    cells = matrix_to_rows(matrix)
    width = max(len(cell) for row in cells for cell in row)
    return "\n".join("  ".join(cell.rjust(width) for cell in row) for row in cells)


# =============================================================================
# Documents <-> domain objects
# =============================================================================


def matrix_from_document(doc: MatrixDocument) -> Matrix:
    return matrix_from_rows(doc.rows, "rows")


def matrix_to_document(matrix: Matrix, note: Optional[str] = None) -> MatrixDocument:
    return MatrixDocument(note=note, rows=matrix_to_rows(matrix))


def operator_from_document(doc: BlockOperatorDocument) -> BlockOperator:
    head = [
        matrix_from_rows(rows, f"head_blocks[{n}]") for n, rows in enumerate(doc.head_blocks)
    ]
    tail = matrix_from_rows(doc.tail_block, "tail_block")
    for n, block in enumerate(head):
        if not block.is_square:
            raise ParseError(f"head block of shape {block.shape} is not square", f"head_blocks[{n}]")
    if not tail.is_square:
        raise ParseError(f"tail block of shape {tail.shape} is not square", "tail_block")
    return BlockOperator(head, tail)


def operator_to_document(op: BlockOperator, note: Optional[str] = None) -> BlockOperatorDocument:
    return BlockOperatorDocument(
        note=note,
        head_blocks=[matrix_to_rows(block) for block in op.head_blocks],
        tail_block=matrix_to_rows(op.tail_block),
    )


def vector_from_document(doc: VectorDocument) -> SparseVector:
    return vector_from_entries(doc.entries, "entries")


def vector_to_document(vector: SparseVector, note: Optional[str] = None) -> VectorDocument:
    return VectorDocument(note=note, entries=vector_to_entries(vector))


def decomposition_from_document(
    doc: DecompositionDocument,
) -> tuple[InvariantDecomposition, Optional[GramForm]]:
    """The decomposition and its Gram form (None for the standard inner product)."""
    parts = []
    for p, vectors in enumerate(doc.parts):
        basis = [
            vector_from_entries(entries, f"parts[{p}][{n}]") for n, entries in enumerate(vectors)
        ]
        try:
            parts.append(Subspace(doc.ambient_dim, basis))
        except DimensionError as e:
            raise ParseError(str(e), f"parts[{p}]") from None
    gram = gram_from_rows(doc.gram)
    if gram is not None and gram.dim != doc.ambient_dim:
        raise ParseError(f"Gram matrix of dimension {gram.dim}", "gram")
    return InvariantDecomposition(doc.ambient_dim, parts), gram


def decomposition_to_document(
    decomposition: InvariantDecomposition,
    gram: Optional[GramForm] = None,
    note: Optional[str] = None,
) -> DecompositionDocument:
    return DecompositionDocument(
        note=note,
        ambient_dim=decomposition.ambient_dim,
        parts=[[vector_to_entries(v) for v in part.basis] for part in decomposition.parts],
        gram=None if gram is None or gram.is_identity else matrix_to_rows(gram.entries),
    )


def subspace_pattern(description: BlockSubspace) -> SubspacePatternModel:
    return SubspacePatternModel(
        head=[vector_to_entries(v) for v in description.head_vectors()],
        tail=[vector_to_entries(v) for v in description.tail.basis],
        tail_start=description.head_dim,
        tail_size=description.tail_size,
    )


def solve_report_model(report: SolveReport | DenseSolveReport) -> SolveReportModel:
    if isinstance(report, SolveReport):
        kernel, kernel_basis = subspace_pattern(report.kernel), None
    else:
        kernel, kernel_basis = None, [vector_to_entries(v) for v in report.kernel.basis]
    return SolveReportModel(
        consistent=report.consistent,
        min_solution=vector_to_entries(report.min_solution),
        residual_norm_sq=str(report.residual_norm_sq),
        kernel=kernel,
        kernel_basis=kernel_basis,
    )


def gram_from_rows(rows: Optional[MatrixRows], location: str = "gram") -> Optional[GramForm]:
    if rows is None:
        return None
    try:
        return GramForm(matrix_from_rows(rows, location))
    except GramFormError as e:
        raise ParseError(str(e), location) from None


# =============================================================================
# File IO
# =============================================================================


def _field_path(loc: Sequence) -> str:
    return ".".join(str(part) for part in loc)


def parse_document(text: str, source: str = "<input>") -> Document:
    """Decode JSON and validate it against the document schemas."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}: {e.msg}", f"line {e.lineno}, column {e.colno}") from None
    try:
        return document_adapter.validate_python(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = _field_path(first["loc"])
        raise ParseError(f"{source}: {first['msg']}", location) from None


def load_document(path: Path) -> Document:
    """Read and validate a document; OSError propagates unchanged."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not valid UTF-8 ({e.reason})", f"byte {e.start}") from None
    document = parse_document(text, str(path))
    logger.debug(f"Loaded {document.kind} document from {path}")
    return document


def dump_document(model: BaseModel) -> str:
    """Deterministic JSON: model field order, two-space indent, trailing newline."""
    return model.model_dump_json(indent=2, exclude_none=True) + "\n"
