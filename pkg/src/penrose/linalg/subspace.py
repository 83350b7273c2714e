"""Subspaces of kⁿ given by bases, kernels, images and orthogonal complements."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..core.gram import GramForm
from ..core.vector import SparseVector
from ..errors import ContainmentError, DimensionError
from .matrix import Matrix, null_space, rank_of_vectors, rref


class Subspace:
    """A subspace of k^ambient_dim spanned by linearly independent vectors.

    Bases are never canonicalized; equality is mutual containment.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Sequence[SparseVector] = ()):
        if ambient_dim < 1:
            raise DimensionError("ambient dimension must be positive")
        basis = tuple(basis)
        for vector in basis:
            if vector.max_index > ambient_dim:
                raise DimensionError(
                    f"basis vector index {vector.max_index} exceeds ambient dimension {ambient_dim}"
                )
        if rank_of_vectors(basis, ambient_dim) != len(basis):
            raise DimensionError("basis vectors are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[SparseVector]) -> Subspace:
        """Subspace spanned by arbitrary vectors; a maximal independent subset is kept."""
        vectors = [v for v in vectors if not v.is_zero]
        if not vectors:
            return cls(ambient_dim)
        columns = Matrix.from_columns([v.to_dense(ambient_dim) for v in vectors])
        _, pivots = rref(columns)
        return cls(ambient_dim, [vectors[p] for p in pivots])

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, [SparseVector.basis(i) for i in range(1, ambient_dim + 1)])

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def as_matrix(self) -> Matrix:
        """Basis vectors as columns; only defined for nonzero subspaces."""
        if not self.basis:
            raise DimensionError("the zero subspace has no basis matrix")
        return Matrix.from_columns([v.to_dense(self.ambient_dim) for v in self.basis])

    def contains(self, vector: SparseVector) -> bool:
        if vector.max_index > self.ambient_dim:
            return False
        return rank_of_vectors(self.basis + (vector,), self.ambient_dim) == self.dim

    def is_subspace_of(self, other: Subspace) -> bool:
        self._check_ambient(other)
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        """Sum of subspaces (not necessarily direct)."""
        self._check_ambient(other)
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def is_direct_sum_with(self, other: Subspace) -> bool:
        self._check_ambient(other)
        return rank_of_vectors(self.basis + other.basis, self.ambient_dim) == self.dim + other.dim

    def _check_ambient(self, other: Subspace) -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and self.is_subspace_of(other)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, basis={list(self.basis)})"


def direct_sum(ambient_dim: int, parts: Iterable[Subspace]) -> Subspace:
    """Concatenate the bases of subspaces known to be independent."""
    return Subspace(ambient_dim, [v for part in parts for v in part.basis])


def kernel_basis(matrix: Matrix) -> Subspace:
    """{x : A·x = 0} as a subspace of k^cols."""
    return Subspace(
        matrix.cols, [SparseVector.from_dense(x) for x in null_space(matrix)]
    )


def image_basis(matrix: Matrix) -> Subspace:
    """Column space of A as a subspace of k^rows, spanned by its pivot columns."""
    _, pivots = rref(matrix)
    return Subspace(
        matrix.rows, [SparseVector.from_dense(matrix.column(p)) for p in pivots]
    )


def orthogonal_complement(
    inner: Subspace, outer: Subspace, g: GramForm | None = None
) -> Subspace:
    """{v ∈ outer : g(u, v) = 0 for all u ∈ inner}.

    ``g`` defaults to the standard inner product of the ambient space.
    """
    inner._check_ambient(outer)
    if g is not None and g.dim != outer.ambient_dim:
        raise DimensionError(f"Gram form of dimension {g.dim} on k^{outer.ambient_dim}")
    if not inner.is_subspace_of(outer):
        raise ContainmentError("subspace is not contained in the enclosing subspace")
    if not inner.basis:
        return Subspace(outer.ambient_dim, outer.basis)
    if inner.dim == outer.dim:
        return Subspace.zero(outer.ambient_dim)

    gram = g or GramForm.identity(outer.ambient_dim)
    # g(u, Σ cⱼ hⱼ) = Σ conj(cⱼ) g(u, hⱼ): solve pairing·conj(c) = 0
    pairing = gram.pairing(inner.basis, outer.basis)
    complement = []
    for coefficients in null_space(pairing):
        vector = SparseVector()
        for c, h in zip(coefficients, outer.basis):
            if c:
                vector = vector + h * c.conj()
        complement.append(vector)
    return Subspace(outer.ambient_dim, complement)


def are_orthogonal(left: Subspace, right: Subspace, g: GramForm | None = None) -> bool:
    """True iff g(u, w) = 0 for every u in ``left`` and w in ``right``."""
    left._check_ambient(right)
    if not left.basis or not right.basis:
        return True
    gram = g or GramForm.identity(left.ambient_dim)
    return gram.pairing(left.basis, right.basis).is_zero
