"""Command-line front end: pinv, apply, solve, check, verify and potent."""

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional

from pydantic import BaseModel

from .config import logger, settings, setup_logging
from .decomposition.invariant import blockwise_rgi, char_conditions, check_invariance
from .errors import DimensionError, GeometryError, ParseError, PenroseError
from .linalg.matrix import Matrix
from .linalg.pseudoinverse import mp_inverse, mp_inverse_geometric, verify_penrose
from .models import (
    BlockOperatorDocument,
    CheckReport,
    DecompositionDocument,
    Document,
    MatrixDocument,
    PotencyReport,
    SystemDocument,
    VectorDocument,
    VerifyReport,
)
from .operators import block_operator
from .operators.block_operator import BlockOperator
from .solver.system_solver import solve, solve_dense
from .utils.serialization import (
    decomposition_from_document,
    dump_document,
    format_matrix,
    format_vector,
    load_document,
    matrix_from_document,
    matrix_to_document,
    operator_from_document,
    operator_to_document,
    solve_report_model,
    vector_from_document,
    vector_from_entries,
    vector_to_document,
)


EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2


def _yes(flag: Optional[bool]) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _expect(document: Document, *kinds: type) -> Document:
    if not isinstance(document, kinds):
        names = " or ".join(k.model_fields["kind"].default for k in kinds)
        raise ParseError(f"expected a {names} document, got {document.kind}", "kind")
    return document


def _load_operator(path: Path) -> Matrix | BlockOperator:
    document = _expect(load_document(path), MatrixDocument, BlockOperatorDocument)
    if isinstance(document, MatrixDocument):
        return matrix_from_document(document)
    return operator_from_document(document)


# =============================================================================
# Text renderings
# =============================================================================


def _render_operator(op: BlockOperator) -> str:
    parts = [f"head block {n + 1}:\n{format_matrix(block)}" for n, block in enumerate(op.head_blocks)]
    parts.append(f"tail block (size {op.tail_size}, repeated from coordinate {op.head_dim + 1}):")
    parts.append(format_matrix(op.tail_block))
    return "\n".join(parts)


def _render_report(model: BaseModel) -> str:
    lines = []
    for name, value in model.model_dump(exclude_none=True).items():
        if name == "kind":
            continue
        if isinstance(value, bool):
            value = _yes(value)
        lines.append(f"{name}: {value}")
    return "\n".join(lines)


# =============================================================================
# Commands
# =============================================================================


def cmd_pinv(args: argparse.Namespace) -> tuple[BaseModel, str]:
    """MP inverse of a matrix or block operator file, in the same format."""
    source = _load_operator(args.operator)
    if isinstance(source, Matrix):
        result = mp_inverse(source)
        return matrix_to_document(result), format_matrix(result)
    result = block_operator.mp_inverse(source)
    return operator_to_document(result), _render_operator(result)


def cmd_apply(args: argparse.Namespace) -> tuple[BaseModel, str]:
    source = _load_operator(args.operator)
    vector = vector_from_document(_expect(load_document(args.vector), VectorDocument))
    if isinstance(source, Matrix):
        if vector.max_index > source.cols:
            raise DimensionError(
                f"vector index {vector.max_index} exceeds {source.cols} matrix columns"
            )
        image = source.apply_sparse(vector)
    else:
        image = block_operator.apply(source, vector)
    return vector_to_document(image), format_vector(image)


def _load_system(path: Path, rhs_path: Optional[Path]):
    """Operator and right-hand side from an (operator, rhs) pair or a system file."""
    if rhs_path is not None:
        source = _load_operator(path)
        rhs = vector_from_document(_expect(load_document(rhs_path), VectorDocument))
        return source, rhs
    system = _expect(load_document(path), SystemDocument)
    if system.operator_file is not None:
        source = _load_operator(path.parent / system.operator_file)
    elif isinstance(system.operator, MatrixDocument):
        source = matrix_from_document(system.operator)
    else:
        source = operator_from_document(system.operator)
    return source, vector_from_entries(system.rhs, "rhs")


def cmd_solve(args: argparse.Namespace) -> tuple[BaseModel, str]:
    source, rhs = _load_system(args.operator, args.rhs)
    if isinstance(source, Matrix):
        report = solve_dense(source, rhs)
        model = solve_report_model(report)
        kernel = ", ".join(format_vector(v) for v in report.kernel.basis) or "{0}"
        text = [f"kernel: {kernel}"]
    else:
        report = solve(source, rhs)
        model = solve_report_model(report)
        head = ", ".join(format_vector(v) for v in report.kernel.head_vectors()) or "{0}"
        tail = ", ".join(format_vector(v) for v in report.kernel.tail.basis) or "{0}"
        text = [
            f"kernel head: {head}",
            f"kernel tail: {tail} in local coordinates, "
            f"translated by {report.kernel.tail_size}·k from coordinate {report.kernel.head_dim + 1}",
        ]
    lines = [
        f"consistent: {_yes(report.consistent)}",
        f"min_solution: {format_vector(report.min_solution)}",
        f"residual_norm_sq: {report.residual_norm_sq}",
        *text,
    ]
    return model, "\n".join(lines)


def cmd_check(args: argparse.Namespace) -> tuple[BaseModel, str]:
    """Invariance, both characterization conditions and whether f⁺ equals f†."""
    source = _load_operator(args.operator)
    if isinstance(source, BlockOperator):
        source = block_operator.truncate(source, args.tail_copies)
    document = _expect(load_document(args.decomposition), DecompositionDocument)
    decomposition, gram = decomposition_from_document(document)

    if not check_invariance(source, decomposition):
        report = CheckReport(invariant=False, message="decomposition is not invariant under the map")
    else:
        conditions = char_conditions(source, decomposition, gram)
        rgi = blockwise_rgi(source, decomposition, gram)
        report = CheckReport(
            invariant=True,
            image_condition=conditions.image_condition,
            kernel_condition=conditions.kernel_condition,
            rgi_equals_mp=rgi == mp_inverse_geometric(source, gram, gram),
        )
    return report, _render_report(report)


def _verify_pair(A: Matrix, X: Matrix) -> list[bool]:
    return list(verify_penrose(A, X))


def cmd_verify(args: argparse.Namespace) -> tuple[BaseModel, str]:
    """Penrose conditions for a candidate inverse; block operators are checked blockwise."""
    A = _load_operator(args.matrix)
    X = _load_operator(args.candidate)
    if isinstance(A, Matrix) and isinstance(X, Matrix):
        flags = _verify_pair(A, X)
    elif isinstance(A, BlockOperator) and isinstance(X, BlockOperator):
        if A.geometry != X.geometry:
            raise GeometryError(f"block geometries differ: {A.geometry} vs {X.geometry}")
        pairs = list(zip(A.head_blocks, X.head_blocks)) + [(A.tail_block, X.tail_block)]
        per_block = [_verify_pair(a, x) for a, x in pairs]
        flags = [all(column) for column in zip(*per_block)]
    else:
        raise ParseError("both files must be matrices or both block operators", "kind")
    axa, xax, ax_sa, xa_sa = flags
    report = VerifyReport(
        axa=axa,
        xax=xax,
        ax_self_adjoint=ax_sa,
        xa_self_adjoint=xa_sa,
        reflexive=axa and xax,
        moore_penrose=all(flags),
    )
    return report, _render_report(report)


def cmd_potent(args: argparse.Namespace) -> tuple[BaseModel, str]:
    document = _expect(load_document(args.operator), BlockOperatorDocument)
    op = operator_from_document(document)
    report = PotencyReport(
        finite_potent=block_operator.is_finite_potent(op),
        nilpotency_index=block_operator.nilpotency_index(op),
    )
    return report, _render_report(report)


COMMANDS: dict[str, Callable[[argparse.Namespace], tuple[BaseModel, str]]] = {
    "pinv": cmd_pinv,
    "apply": cmd_apply,
    "solve": cmd_solve,
    "check": cmd_check,
    "verify": cmd_verify,
    "potent": cmd_potent,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penrose",
        description="Exact Moore-Penrose inverses of matrices and infinite block operators.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="write the result here instead of stdout")
    common.add_argument(
        "--format",
        choices=["text", "machine"],
        default=settings.default_format,
        help="text for people, machine for the JSON document schema",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    pinv = verbs.add_parser("pinv", parents=[common], help="Moore-Penrose inverse")
    pinv.add_argument("operator", type=Path)

    apply_ = verbs.add_parser("apply", parents=[common], help="apply an operator to a vector")
    apply_.add_argument("operator", type=Path)
    apply_.add_argument("vector", type=Path)

    solve_ = verbs.add_parser("solve", parents=[common], help="minimal least-norm solution")
    solve_.add_argument("operator", type=Path, help="operator file, or a system file alone")
    solve_.add_argument("rhs", type=Path, nargs="?", help="right-hand side vector file")

    check = verbs.add_parser("check", parents=[common], help="blockwise inverse conditions")
    check.add_argument("operator", type=Path)
    check.add_argument("decomposition", type=Path)
    check.add_argument(
        "--tail-copies",
        type=int,
        default=0,
        help="tail windows kept when the operator file is a block operator",
    )

    verify = verbs.add_parser("verify", parents=[common], help="Penrose conditions")
    verify.add_argument("matrix", type=Path)
    verify.add_argument("candidate", type=Path)

    potent = verbs.add_parser("potent", parents=[common], help="finite potency verdict")
    potent.add_argument("operator", type=Path)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(settings.log_dir, settings.log_level)
    logger.info(f"Running {args.verb}")

    try:
        model, text = COMMANDS[args.verb](args)
        output = dump_document(model) if args.format == "machine" else text + "\n"
        if args.out is not None:
            args.out.write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(output)
    except (ParseError, OSError) as e:
        logger.error(f"{args.verb} failed on input/output: {e}", exc_info=settings.debug)
        return EXIT_PARSE
    except PenroseError as e:
        logger.error(f"{args.verb} failed: {e}", exc_info=settings.debug)
        return EXIT_SEMANTIC

    logger.info(f"{args.verb} finished")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
