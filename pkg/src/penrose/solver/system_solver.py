"""Minimal least-norm solutions of f(x) = w for block operators and finite matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..config import logger
from ..core.gram import GramForm, norm_squared
from ..core.vector import SparseVector
from ..errors import DimensionError
from ..linalg.matrix import Matrix
from ..linalg.pseudoinverse import mp_inverse_geometric
from ..linalg.subspace import Subspace, kernel_basis
from ..operators.block_operator import (
    BlockOperator,
    BlockSubspace,
    apply,
    kernel_description,
    mp_inverse,
)


@dataclass(frozen=True)
class SolveReport:
    """Outcome of solving φ(x) = w.

    Every solution of a consistent system is ``min_solution + h`` with ``h`` in
    ``kernel``.
    """

    consistent: bool
    min_solution: SparseVector
    residual_norm_sq: Fraction
    kernel: BlockSubspace


@dataclass(frozen=True)
class DenseSolveReport:
    consistent: bool
    min_solution: SparseVector
    residual_norm_sq: Fraction
    kernel: Subspace


def residual_norm_squared(op: BlockOperator, x: SparseVector, w: SparseVector) -> Fraction:
    """‖φ(x) − w‖² in the standard inner product."""
    return norm_squared(apply(op, x) - w)


def min_least_norm_solution(op: BlockOperator, w: SparseVector) -> SparseVector:
    """φ†(w), the least-squares minimizer of smallest norm."""
    return apply(mp_inverse(op), w)


def is_consistent(op: BlockOperator, w: SparseVector) -> bool:
    """w ∈ Im φ, tested as (φ ∘ φ†)(w) = w."""
    return apply(op, min_least_norm_solution(op, w)) == w


def solve(op: BlockOperator, w: SparseVector) -> SolveReport:
    pinv = mp_inverse(op)
    solution = apply(pinv, w)
    residual = residual_norm_squared(op, solution, w)
    report = SolveReport(
        consistent=residual == 0,
        min_solution=solution,
        residual_norm_sq=residual,
        kernel=kernel_description(op),
    )
    logger.debug(
        f"solve: {op!r}, rhs support {list(w.support)}, consistent={report.consistent}"
    )
    return report


def is_consistent_with(A: Matrix, X: Matrix, w: SparseVector) -> bool:
    """w ∈ Im A, tested as (A·X)(w) = w for a generalized inverse X of A."""
    if w.max_index > A.rows:
        raise DimensionError(f"right-hand side index {w.max_index} exceeds {A.rows} rows")
    return (A @ X).apply_sparse(w) == w


def solve_dense(
    A: Matrix,
    w: SparseVector,
    gV: GramForm | None = None,
    gW: GramForm | None = None,
) -> DenseSolveReport:
    """Finite analogue of :func:`solve`; norms are those of ``gV`` and ``gW``."""
    if w.max_index > A.rows:
        raise DimensionError(f"right-hand side index {w.max_index} exceeds {A.rows} rows")
    pinv = mp_inverse_geometric(A, gV, gW)
    solution = pinv.apply_sparse(w)
    residual = norm_squared(A.apply_sparse(solution) - w, gW)
    return DenseSolveReport(
        consistent=residual == 0,
        min_solution=solution,
        residual_norm_sq=residual,
        kernel=kernel_basis(A),
    )
