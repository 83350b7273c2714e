"""Finitely supported sequences over the standard basis v₁, v₂, …"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence

from ..errors import DimensionError
from .scalar import ZERO, Scalar, ScalarLike


class SparseVector:
    """An element of ⊕ᵢ k stored as its nonzero coordinates.

    Indices are 1-based (coordinate ``i`` is the coefficient of vᵢ), strictly
    increasing, and no stored value is zero. Instances are immutable.
    """

    __slots__ = ("_entries", "_lookup")

    def __init__(self, values: Mapping[int, ScalarLike] | None = None):
        lookup: dict[int, Scalar] = {}
        for index, value in (values or {}).items():
            if not isinstance(index, int) or isinstance(index, bool) or index < 1:
                raise DimensionError(f"vector index must be a positive integer, got {index!r}")
            scalar = Scalar.of(value)
            if not scalar.is_zero:
                lookup[index] = scalar
        self._entries: tuple[tuple[int, Scalar], ...] = tuple(sorted(lookup.items()))
        self._lookup = dict(self._entries)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, ScalarLike]]) -> SparseVector:
        """Build from (index, value) pairs; repeated indices accumulate."""
        values: dict[int, Scalar] = {}
        for index, value in pairs:
            values[index] = values.get(index, ZERO) + Scalar.of(value)
        return cls(values)

    @classmethod
    def from_dense(cls, values: Sequence[ScalarLike], offset: int = 0) -> SparseVector:
        """Coordinates ``values[j]`` land on index ``offset + j + 1``."""
        return cls({offset + j + 1: value for j, value in enumerate(values)})

    @classmethod
    def basis(cls, index: int) -> SparseVector:
        """The standard basis vector v_index."""
        return cls({index: 1})

    def to_dense(self, dim: int, offset: int = 0) -> list[Scalar]:
        """Coordinates ``offset+1 .. offset+dim`` as a dense list."""
        return [self._lookup.get(offset + j + 1, ZERO) for j in range(dim)]

    def to_pairs(self) -> list[tuple[int, Scalar]]:
        return list(self._entries)

    def restrict(self, start: int, stop: int) -> SparseVector:
        """Keep only coordinates with ``start <= index <= stop``."""
        return SparseVector({i: v for i, v in self._entries if start <= i <= stop})

    @property
    def entries(self) -> tuple[tuple[int, Scalar], ...]:
        return self._entries

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(index for index, _ in self._entries)

    @property
    def max_index(self) -> int:
        """Largest index in the support, 0 for the zero vector."""
        return self._entries[-1][0] if self._entries else 0

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def __getitem__(self, index: int) -> Scalar:
        return self._lookup.get(index, ZERO)

    def __iter__(self) -> Iterator[tuple[int, Scalar]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __add__(self, other: SparseVector) -> SparseVector:
        values = dict(self._lookup)
        for index, value in other._entries:
            values[index] = values.get(index, ZERO) + value
        return SparseVector(values)

    def __sub__(self, other: SparseVector) -> SparseVector:
        return self + (-other)

    def __neg__(self) -> SparseVector:
        return SparseVector({i: -v for i, v in self._entries})

    def __mul__(self, scalar: ScalarLike) -> SparseVector:
        scalar = Scalar.of(scalar)
        return SparseVector({i: v * scalar for i, v in self._entries})

    def __rmul__(self, scalar: ScalarLike) -> SparseVector:
        scalar = Scalar.of(scalar)
        return SparseVector({i: scalar * v for i, v in self._entries})

    def conj(self) -> SparseVector:
        return SparseVector({i: v.conj() for i, v in self._entries})

    def shift(self, offset: int) -> SparseVector:
        """Translate every index by ``offset``."""
        return SparseVector({i + offset: v for i, v in self._entries})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {v}" for i, v in self._entries)
        return f"SparseVector({{{body}}})"
