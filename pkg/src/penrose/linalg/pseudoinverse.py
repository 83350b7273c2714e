"""Adjoints, full-rank factorization and Moore-Penrose inverses of finite matrices."""

from __future__ import annotations

from typing import NamedTuple

from ..config import logger
from ..core.gram import GramForm
from ..core.scalar import ZERO
from ..errors import DimensionError, ZeroMapError
from .matrix import Matrix, inverse, rref
from .subspace import Subspace, image_basis, kernel_basis, orthogonal_complement


class PenroseConditions(NamedTuple):
    """Which of the four Penrose identities hold for a candidate inverse X of A."""

    axa: bool
    xax: bool
    ax_self_adjoint: bool
    xa_self_adjoint: bool

    @property
    def reflexive(self) -> bool:
        return self.axa and self.xax

    @property
    def moore_penrose(self) -> bool:
        return all(self)


def _gram(g: GramForm | None, dim: int, label: str) -> GramForm:
    if g is None:
        return GramForm.identity(dim)
    if g.dim != dim:
        raise DimensionError(f"{label} has dimension {g.dim}, expected {dim}")
    return g


def adjoint(A: Matrix, gV: GramForm | None = None, gW: GramForm | None = None) -> Matrix:
    """The matrix A* with gV(v, A*w) = gW(Av, w) for all v, w.

    With g(x, y) = xᵀ·G·ȳ this is conj(G_V)⁻¹·Aᴴ·conj(G_W), which reduces to
    G_V⁻¹·Aᴴ·G_W for real Gram matrices and to Aᴴ for orthonormal bases.
    """
    gV = _gram(gV, A.cols, "gV")
    gW = _gram(gW, A.rows, "gW")
    result = A.H
    if not gV.is_identity:
        result = inverse(gV.entries.conj()) @ result
    if not gW.is_identity:
        result = result @ gW.entries.conj()
    return result


def full_rank_factorization(A: Matrix) -> tuple[Matrix, Matrix]:
    """A = F·G with F the pivot columns of A and G the nonzero rows of rref(A)."""
    reduced, pivots = rref(A)
    if not pivots:
        raise ZeroMapError("the zero matrix has no full-rank factorization")
    F = A.submatrix(range(A.rows), pivots)
    G = reduced.submatrix(range(len(pivots)), range(A.cols))
    return F, G


def mp_inverse(A: Matrix) -> Matrix:
    """A† = G*·(G·G*)⁻¹·(F*·F)⁻¹·F* for the standard inner products."""
    try:
        F, G = full_rank_factorization(A)
    except ZeroMapError:
        return Matrix.zeros(A.cols, A.rows)
    Gh, Fh = G.H, F.H
    result = Gh @ inverse(G @ Gh) @ inverse(Fh @ F) @ Fh
    logger.debug(f"mp_inverse: {A.rows}x{A.cols} matrix of rank {F.cols}")
    return result


def _columns(subspace: Subspace) -> list[list]:
    return [v.to_dense(subspace.ambient_dim) for v in subspace.basis]


def mp_inverse_geometric(
    A: Matrix, gV: GramForm | None = None, gW: GramForm | None = None
) -> Matrix:
    """Invert A on [Ker A]^⊥ onto Im A and extend by zero on [Im A]^⊥.

    Complements are taken with respect to ``gV`` on the source and ``gW`` on
    the target.
    """
    gV = _gram(gV, A.cols, "gV")
    gW = _gram(gW, A.rows, "gW")
    if A.is_zero:
        return Matrix.zeros(A.cols, A.rows)

    coimage = orthogonal_complement(kernel_basis(A), Subspace.full(A.cols), gV)
    cokernel = orthogonal_complement(image_basis(A), Subspace.full(A.rows), gW)

    # The target space splits as A([Ker A]^⊥) ⊕ [Im A]^⊥; X sends A·k to k and kills the rest.
    sources = _columns(coimage)
    targets = [A.apply(k) for k in sources] + _columns(cokernel)
    zero_column = [ZERO] * A.cols
    preimages = sources + [zero_column] * cokernel.dim
    result = Matrix.from_columns(preimages) @ inverse(Matrix.from_columns(targets))
    logger.debug(
        f"mp_inverse_geometric: {A.rows}x{A.cols} matrix, rank {coimage.dim}, "
        f"orthonormal={gV.is_identity and gW.is_identity}"
    )
    return result


def verify_penrose(
    A: Matrix, X: Matrix, gV: GramForm | None = None, gW: GramForm | None = None
) -> PenroseConditions:
    """Evaluate AXA = A, XAX = X, (AX)* = AX and (XA)* = XA exactly.

    Adjoints of AX and XA are taken with ``gW`` and ``gV`` respectively.
    """
    if X.shape != (A.cols, A.rows):
        raise DimensionError(f"candidate inverse of shape {X.shape} for a {A.shape} matrix")
    gV = _gram(gV, A.cols, "gV")
    gW = _gram(gW, A.rows, "gW")
    AX = A @ X
    XA = X @ A
    return PenroseConditions(
        axa=AX @ A == A,
        xax=XA @ X == X,
        ax_self_adjoint=adjoint(AX, gW, gW) == AX,
        xa_self_adjoint=adjoint(XA, gV, gV) == XA,
    )


def verify_reflexive(A: Matrix, X: Matrix) -> bool:
    """True iff X is a reflexive generalized inverse: AXA = A and XAX = X."""
    if X.shape != (A.cols, A.rows):
        raise DimensionError(f"candidate inverse of shape {X.shape} for a {A.shape} matrix")
    return A @ X @ A == A and X @ A @ X == X


def projector(onto: Subspace, along: Subspace) -> Matrix:
    """The projection onto ``onto`` with kernel ``along``; the two must be complementary."""
    onto._check_ambient(along)
    n = onto.ambient_dim
    if onto.dim + along.dim != n or not onto.is_direct_sum_with(along):
        raise DimensionError("projection needs complementary subspaces")
    if not onto.basis:
        return Matrix.zeros(n, n)
    if not along.basis:
        return Matrix.identity(n)
    images = _columns(onto) + [[ZERO] * n] * along.dim
    basis = Matrix.from_columns(_columns(onto) + _columns(along))
    return Matrix.from_columns(images) @ inverse(basis)


def kernel_projector(A: Matrix, gV: GramForm | None = None) -> Matrix:
    """Orthogonal projection of the source onto [Ker A]^⊥."""
    gV = _gram(gV, A.cols, "gV")
    kernel = kernel_basis(A)
    coimage = orthogonal_complement(kernel, Subspace.full(A.cols), gV)
    return projector(coimage, kernel)


def image_projector(A: Matrix, gW: GramForm | None = None) -> Matrix:
    """Orthogonal projection of the target onto Im A."""
    gW = _gram(gW, A.rows, "gW")
    image = image_basis(A)
    cokernel = orthogonal_complement(image, Subspace.full(A.rows), gW)
    return projector(image, cokernel)
