"""Invariant direct-sum decompositions and the blockwise reflexive generalized inverse."""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from ..config import logger
from ..core.gram import GramForm
from ..core.vector import SparseVector
from ..errors import DecompositionError, DimensionError
from ..linalg.matrix import Matrix, inverse, solve_full_column_rank
from ..linalg.pseudoinverse import mp_inverse_geometric
from ..linalg.subspace import (
    Subspace,
    are_orthogonal,
    direct_sum,
    image_basis,
    kernel_basis,
    orthogonal_complement,
)


class InvariantDecomposition:
    """A family of subspaces H₁, …, Hₙ with E = H₁ ⊕ … ⊕ Hₙ.

    Invariance under a particular map is checked separately by
    :func:`check_invariance`; the family itself only has to be a direct sum.
    """

    __slots__ = ("ambient_dim", "parts")

    def __init__(self, ambient_dim: int, parts: Sequence[Subspace]):
        parts = tuple(parts)
        if not parts:
            raise DecompositionError("a decomposition needs at least one part")
        for index, part in enumerate(parts):
            if part.ambient_dim != ambient_dim:
                raise DimensionError(
                    f"part {index} lives in k^{part.ambient_dim}, expected k^{ambient_dim}"
                )
            if not part.basis:
                raise DecompositionError(f"part {index} is the zero subspace")
        if sum(part.dim for part in parts) != ambient_dim:
            raise DecompositionError("part dimensions do not add up to the ambient dimension")
        try:
            direct_sum(ambient_dim, parts)
        except DimensionError:
            raise DecompositionError("parts do not form a direct sum") from None
        self.ambient_dim = ambient_dim
        self.parts = parts

    @classmethod
    def single(cls, ambient_dim: int) -> InvariantDecomposition:
        """The trivial decomposition {E}."""
        return cls(ambient_dim, [Subspace.full(ambient_dim)])

    def basis_matrix(self) -> Matrix:
        """Concatenated part bases as columns (an invertible change of basis)."""
        return Matrix.from_columns(
            [v.to_dense(self.ambient_dim) for part in self.parts for v in part.basis]
        )

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        dims = [part.dim for part in self.parts]
        return f"InvariantDecomposition(ambient_dim={self.ambient_dim}, part_dims={dims})"


class CharConditions(NamedTuple):
    image_condition: bool
    kernel_condition: bool


class DecompositionComplements(NamedTuple):
    h_perp: Subspace
    h_tilde_perp: Subspace


def _check_square(A: Matrix, D: InvariantDecomposition) -> None:
    if not A.is_square or A.rows != D.ambient_dim:
        raise DimensionError(
            f"{A.shape} matrix for a decomposition of k^{D.ambient_dim}"
        )


def check_invariance(A: Matrix, D: InvariantDecomposition) -> bool:
    """True iff A maps every part into itself."""
    _check_square(A, D)
    for part in D.parts:
        for h in part.basis:
            if not part.contains(A.apply_sparse(h)):
                return False
    return True


def part_restrictions(A: Matrix, D: InvariantDecomposition) -> list[Matrix]:
    """Coordinate matrices of fᵢ = A|Hᵢ in each part's own basis."""
    _check_square(A, D)
    restrictions = []
    for index, part in enumerate(D.parts):
        basis = part.as_matrix()
        coordinates = solve_full_column_rank(basis, A @ basis)
        if coordinates is None:
            raise DecompositionError(f"part {index} is not invariant under the map")
        restrictions.append(coordinates)
    return restrictions


def _from_coordinates(part: Subspace, coordinates: Sequence) -> SparseVector:
    vector = SparseVector()
    for c, h in zip(coordinates, part.basis):
        if c:
            vector = vector + h * c
    return vector


def part_images(A: Matrix, D: InvariantDecomposition) -> list[Subspace]:
    """Im fᵢ ⊆ Hᵢ as subspaces of the ambient space."""
    images = []
    for part, block in zip(D.parts, part_restrictions(A, D)):
        local = image_basis(block)
        images.append(
            Subspace(D.ambient_dim, [_from_coordinates(part, v.to_dense(part.dim)) for v in local.basis])
        )
    return images


def part_kernels(A: Matrix, D: InvariantDecomposition) -> list[Subspace]:
    """Ker fᵢ ⊆ Hᵢ as subspaces of the ambient space."""
    kernels = []
    for part, block in zip(D.parts, part_restrictions(A, D)):
        local = kernel_basis(block)
        kernels.append(
            Subspace(D.ambient_dim, [_from_coordinates(part, v.to_dense(part.dim)) for v in local.basis])
        )
    return kernels


def blockwise_rgi(
    A: Matrix, D: InvariantDecomposition, g: GramForm | None = None
) -> Matrix:
    """f⁺ with f⁺|Hᵢ = (f|Hᵢ)†, each part carrying the restriction of ``g``.

    Built as P·diag(X₁, …, Xₙ)·P⁻¹ where P is the basis matrix of ``D``.
    """
    gram = g or GramForm.identity(D.ambient_dim)
    blocks = []
    for part, block in zip(D.parts, part_restrictions(A, D)):
        local = gram.restricted(part.basis)
        blocks.append(mp_inverse_geometric(block, local, local))
    P = D.basis_matrix()
    result = P @ Matrix.block_diagonal(blocks) @ inverse(P)
    logger.debug(f"blockwise_rgi: {len(D)} parts, dims {[part.dim for part in D.parts]}")
    return result


def relative_complements(
    D: InvariantDecomposition, subspaces: Sequence[Subspace], g: GramForm | None = None
) -> list[Subspace]:
    """[Uᵢ]ᵢ^⊥ for each Uᵢ ⊆ Hᵢ."""
    if len(subspaces) != len(D):
        raise DimensionError(f"{len(subspaces)} subspaces for {len(D)} parts")
    return [
        orthogonal_complement(sub, part, g) for sub, part in zip(subspaces, D.parts)
    ]


def relative_complements_sum(
    D: InvariantDecomposition, subspaces: Sequence[Subspace], g: GramForm | None = None
) -> Subspace:
    """⊕ᵢ [Uᵢ]ᵢ^⊥."""
    return direct_sum(D.ambient_dim, relative_complements(D, subspaces, g))


def complements_orthogonal(
    D: InvariantDecomposition, subspaces: Sequence[Subspace], g: GramForm | None = None
) -> bool:
    """True iff [Uᵢ]ᵢ^⊥ ⊆ [Σ_{j≠i} Uⱼ]^⊥ for every i."""
    complements = relative_complements(D, subspaces, g)
    for i, complement in enumerate(complements):
        others = Subspace.zero(D.ambient_dim)
        for j, sub in enumerate(subspaces):
            if j != i:
                others = others + sub
        if not are_orthogonal(complement, others, g):
            return False
    return True


def complements_within_orthogonal(
    D: InvariantDecomposition, subspaces: Sequence[Subspace], g: GramForm | None = None
) -> bool:
    """True iff ⊕ᵢ [Uᵢ]ᵢ^⊥ ⊆ [Σᵢ Uᵢ]^⊥."""
    total = Subspace.zero(D.ambient_dim)
    for sub in subspaces:
        total = total + sub
    return are_orthogonal(relative_complements_sum(D, subspaces, g), total, g)


def char_conditions(
    A: Matrix, D: InvariantDecomposition, g: GramForm | None = None
) -> CharConditions:
    """Whether relative complements of images and of kernels are orthogonal to the other parts.

    Both hold exactly when the blockwise inverse is the Moore-Penrose inverse.
    """
    return CharConditions(
        image_condition=complements_orthogonal(D, part_images(A, D), g),
        kernel_condition=complements_orthogonal(D, part_kernels(A, D), g),
    )


def decomposition_complements(
    A: Matrix, D: InvariantDecomposition, g: GramForm | None = None
) -> DecompositionComplements:
    """⊕ᵢ [Im fᵢ]ᵢ^⊥ and ⊕ᵢ [Ker fᵢ]ᵢ^⊥, checked to complement Im f and Ker f."""
    h_perp = relative_complements_sum(D, part_images(A, D), g)
    h_tilde_perp = relative_complements_sum(D, part_kernels(A, D), g)
    image = image_basis(A)
    kernel = kernel_basis(A)
    if image.dim + h_perp.dim != D.ambient_dim or not image.is_direct_sum_with(h_perp):
        raise DecompositionError("image complements do not complement Im f")
    if kernel.dim + h_tilde_perp.dim != D.ambient_dim or not kernel.is_direct_sum_with(
        h_tilde_perp
    ):
        raise DecompositionError("kernel complements do not complement Ker f")
    return DecompositionComplements(h_perp, h_tilde_perp)
