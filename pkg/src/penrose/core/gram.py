"""Inner products given by Gram matrices, and the norms they induce."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ..errors import DimensionError, GramFormError
from ..linalg.matrix import Matrix, determinant
from .scalar import ZERO, Scalar
from .vector import SparseVector


class GramForm:
    """Coordinate matrix of an inner product g in a chosen basis.

    ``entries[i, j] = g(eᵢ₊₁, eⱼ₊₁)``. The form is linear in its first
    argument and conjugate-linear in its second, so
    g(x, y) = Σᵢⱼ xᵢ · conj(yⱼ) · entries[i, j].
    """

    __slots__ = ("entries", "dim", "_identity")

    def __init__(self, entries: Matrix | Sequence[Sequence[Scalar]], validate: bool = True):
        if not isinstance(entries, Matrix):
            entries = Matrix(entries)
        if not entries.is_square:
            raise GramFormError(f"Gram matrix must be square, got {entries.shape}")
        self.entries = entries
        self.dim = entries.rows
        self._identity = entries == Matrix.identity(self.dim)
        if validate and not self._identity:
            self._validate()

    @classmethod
    def identity(cls, dim: int) -> GramForm:
        """The Gram form of an orthonormal basis."""
        return cls(Matrix.identity(dim), validate=False)

    @property
    def is_identity(self) -> bool:
        return self._identity

    def _validate(self) -> None:
        """Hermitian check plus Sylvester's criterion on exact leading minors."""
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                if self.entries[j, i] != self.entries[i, j].conj():
                    raise GramFormError(f"Gram matrix is not Hermitian at ({i}, {j})")
        for k in range(1, n + 1):
            minor = determinant(self.entries.submatrix(range(k), range(k)))
            if not minor.is_real or minor.re <= 0:
                raise GramFormError(f"leading principal minor of order {k} is {minor}, not positive")

    def __call__(self, v: SparseVector, w: SparseVector) -> Scalar:
        return inner_product(v, w, self)

    def restricted(self, basis: Sequence[SparseVector]) -> GramForm:
        """The induced Gram form on span(basis): entries g(bᵢ, bⱼ)."""
        return GramForm(self.pairing(basis, basis), validate=False)

    def pairing(self, left: Sequence[SparseVector], right: Sequence[SparseVector]) -> Matrix:
        """Matrix of g(uᵢ, wⱼ) for uᵢ in ``left`` and wⱼ in ``right``."""
        return Matrix([[inner_product(u, w, self) for w in right] for u in left])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GramForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"GramForm(dim={self.dim})"


def _check_indices(v: SparseVector, dim: int) -> None:
    if v.max_index > dim:
        raise DimensionError(f"index {v.max_index} exceeds Gram form dimension {dim}")


def inner_product(v: SparseVector, w: SparseVector, g: GramForm | None = None) -> Scalar:
    """g(v, w): linear in ``v``, conjugate-linear in ``w``.

    ``g=None`` is the standard orthonormal inner product on ⊕ᵢ k, with no
    bound on the indices.
    """
    if g is None or g.is_identity:
        if g is not None:
            _check_indices(v, g.dim)
            _check_indices(w, g.dim)
        total = ZERO
        for index, value in v:
            other = w[index]
            if other:
                total = total + value * other.conj()
        return total

    _check_indices(v, g.dim)
    _check_indices(w, g.dim)
    total = ZERO
    for i, vi in v:
        for j, wj in w:
            gij = g.entries[i - 1, j - 1]
            if gij:
                total = total + vi * wj.conj() * gij
    return total


def norm_squared(v: SparseVector, g: GramForm | None = None) -> Fraction:
    """g(v, v) as an exact nonnegative rational; square roots are never taken."""
    value = inner_product(v, v, g)
    # g(v, v) equals its own conjugate, so the imaginary part is exactly zero
    assert value.is_real, value
    return value.re
