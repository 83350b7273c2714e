"""Infinite block-diagonal operators: finitely many head blocks and one periodic tail block."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..config import logger
from ..core.vector import SparseVector
from ..errors import DimensionError, GeometryError
from ..linalg.matrix import Matrix
from ..linalg.pseudoinverse import mp_inverse as matrix_mp_inverse
from ..linalg.subspace import Subspace, image_basis, kernel_basis, orthogonal_complement


Geometry = tuple[tuple[int, ...], int]


class BlockOperator:
    """An endomorphism of ⊕ᵢ k acting block-diagonally on the standard basis.

    Head block j acts on coordinates 1+Σ_{l<j} d_l .. Σ_{l≤j} d_l; the tail
    block then acts on every following run of t coordinates, forever.
    """

    __slots__ = ("head_blocks", "tail_block")

    def __init__(self, head_blocks: Sequence[Matrix], tail_block: Matrix):
        head_blocks = tuple(head_blocks)
        for index, block in enumerate(head_blocks):
            if not block.is_square:
                raise DimensionError(f"head block {index} has shape {block.shape}, not square")
        if not tail_block.is_square:
            raise DimensionError(f"tail block has shape {tail_block.shape}, not square")
        self.head_blocks = head_blocks
        self.tail_block = tail_block

    @classmethod
    def identity(cls, head_sizes: Sequence[int], tail_size: int) -> BlockOperator:
        return cls([Matrix.identity(d) for d in head_sizes], Matrix.identity(tail_size))

    @classmethod
    def zero(cls, head_sizes: Sequence[int], tail_size: int) -> BlockOperator:
        return cls([Matrix.zeros(d, d) for d in head_sizes], Matrix.zeros(tail_size, tail_size))

    @property
    def head_sizes(self) -> tuple[int, ...]:
        return tuple(block.rows for block in self.head_blocks)

    @property
    def tail_size(self) -> int:
        return self.tail_block.rows

    @property
    def head_dim(self) -> int:
        return sum(self.head_sizes)

    @property
    def geometry(self) -> Geometry:
        return self.head_sizes, self.tail_size

    def tail_offset(self, copy: int) -> int:
        """Number of coordinates before tail copy ``copy`` (0-based)."""
        return self.head_dim + copy * self.tail_size

    def head_offsets(self) -> list[int]:
        offsets, start = [], 0
        for size in self.head_sizes:
            offsets.append(start)
            start += size
        return offsets

    def block_at(self, index: int) -> tuple[Matrix, int]:
        """The block acting on coordinate ``index`` and the offset of its window."""
        if index < 1:
            raise DimensionError(f"coordinate index must be positive, got {index}")
        if index > self.head_dim:
            copy = (index - self.head_dim - 1) // self.tail_size
            return self.tail_block, self.tail_offset(copy)
        for offset, block in zip(self.head_offsets(), self.head_blocks):
            if index <= offset + block.rows:
                return block, offset
        raise AssertionError("unreachable")

    def blocks(self, tail_copies: int) -> Iterator[tuple[Matrix, int]]:
        """Head blocks followed by ``tail_copies`` tail copies, with their offsets."""
        yield from zip(self.head_blocks, self.head_offsets())
        for copy in range(tail_copies):
            yield self.tail_block, self.tail_offset(copy)

    def apply(self, x: SparseVector) -> SparseVector:
        return apply(self, x)

    def __matmul__(self, other: BlockOperator) -> BlockOperator:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockOperator):
            return NotImplemented
        return self.head_blocks == other.head_blocks and self.tail_block == other.tail_block

    def __hash__(self) -> int:
        return hash((self.head_blocks, self.tail_block))

    def __repr__(self) -> str:
        return f"BlockOperator(head_sizes={list(self.head_sizes)}, tail_size={self.tail_size})"


def apply(op: BlockOperator, x: SparseVector) -> SparseVector:
    """Blockwise product; only blocks meeting the support of ``x`` are evaluated."""
    engaged: dict[int, Matrix] = {}
    for index in x.support:
        block, offset = op.block_at(index)
        engaged[offset] = block
    result = SparseVector()
    for offset, block in sorted(engaged.items()):
        result = result + block.apply_sparse(x, offset)
    return result


def mp_inverse(op: BlockOperator) -> BlockOperator:
    """The Moore-Penrose inverse, taken block by block."""
    result = BlockOperator(
        [matrix_mp_inverse(block) for block in op.head_blocks],
        matrix_mp_inverse(op.tail_block),
    )
    logger.debug(f"mp_inverse of {op!r}")
    return result


def _check_geometry(a: BlockOperator, b: BlockOperator) -> None:
    if a.geometry != b.geometry:
        raise GeometryError(f"block geometries differ: {a.geometry} vs {b.geometry}")


def compose(a: BlockOperator, b: BlockOperator) -> BlockOperator:
    """a ∘ b for operators with identical block geometry."""
    _check_geometry(a, b)
    return BlockOperator(
        [x @ y for x, y in zip(a.head_blocks, b.head_blocks)], a.tail_block @ b.tail_block
    )


def power(op: BlockOperator, n: int) -> BlockOperator:
    if n < 0:
        raise DimensionError(f"power needs a nonnegative exponent, got {n}")
    return BlockOperator([block.power(n) for block in op.head_blocks], op.tail_block.power(n))


def truncate(op: BlockOperator, tail_copies: int) -> Matrix:
    """Dense matrix on the head plus the first ``tail_copies`` tail windows."""
    if tail_copies < 0:
        raise DimensionError(f"tail_copies must be nonnegative, got {tail_copies}")
    blocks = [block for block, _ in op.blocks(tail_copies)]
    if not blocks:
        raise DimensionError("an operator without head blocks needs at least one tail copy")
    return Matrix.block_diagonal(blocks)


def nilpotency_index(op: BlockOperator) -> int | None:
    """Smallest n with tailⁿ = 0, or None when the tail block is not nilpotent."""
    current = op.tail_block
    for n in range(1, op.tail_size + 1):
        if current.is_zero:
            return n
        current = current @ op.tail_block
    return None


def is_finite_potent(op: BlockOperator) -> bool:
    """φⁿV is finite-dimensional for some n, i.e. the tail block is nilpotent."""
    return op.tail_block.power(op.tail_size).is_zero


@dataclass(frozen=True)
class BlockSubspace:
    """A subspace ⊕ᵢ Sᵢ with one piece per head block and one repeated tail piece.

    Piece coordinates are local to their block; ``tail`` is translated into
    every tail copy.
    """

    head: tuple[Subspace, ...]
    tail: Subspace
    head_dim: int

    @property
    def tail_size(self) -> int:
        return self.tail.ambient_dim

    def head_offsets(self) -> list[int]:
        offsets, start = [], 0
        for piece in self.head:
            offsets.append(start)
            start += piece.ambient_dim
        return offsets

    def head_vectors(self) -> list[SparseVector]:
        """Basis vectors of the head pieces in absolute coordinates."""
        return [
            v.shift(offset)
            for offset, piece in zip(self.head_offsets(), self.head)
            for v in piece.basis
        ]

    def tail_copy(self, k: int) -> list[SparseVector]:
        """Basis of the tail piece inside tail copy ``k`` (0-based), absolute coordinates."""
        if k < 0:
            raise DimensionError(f"tail copy index must be nonnegative, got {k}")
        offset = self.head_dim + k * self.tail_size
        return [v.shift(offset) for v in self.tail.basis]

    def vectors_within(self, n: int) -> list[SparseVector]:
        """Basis vectors of every block window lying entirely in coordinates 1..n."""
        vectors = [
            v.shift(offset)
            for offset, piece in zip(self.head_offsets(), self.head)
            if offset + piece.ambient_dim <= n
            for v in piece.basis
        ]
        k = 0
        while self.head_dim + (k + 1) * self.tail_size <= n:
            vectors.extend(self.tail_copy(k))
            k += 1
        return vectors

    def contains(self, x: SparseVector) -> bool:
        """Membership tested window by window."""
        for offset, piece in zip(self.head_offsets(), self.head):
            local = x.restrict(offset + 1, offset + piece.ambient_dim).shift(-offset)
            if not piece.contains(local):
                return False
        for index in x.support:
            if index <= self.head_dim:
                continue
            copy = (index - self.head_dim - 1) // self.tail_size
            offset = self.head_dim + copy * self.tail_size
            local = x.restrict(offset + 1, offset + self.tail_size).shift(-offset)
            if not self.tail.contains(local):
                return False
        return True

    def orthogonal_complement(self) -> BlockSubspace:
        """Complement under the standard inner product, window by window."""
        return BlockSubspace(
            head=tuple(
                orthogonal_complement(piece, Subspace.full(piece.ambient_dim))
                for piece in self.head
            ),
            tail=orthogonal_complement(self.tail, Subspace.full(self.tail_size)),
            head_dim=self.head_dim,
        )

    @property
    def is_zero(self) -> bool:
        return not self.tail.basis and all(not piece.basis for piece in self.head)


def kernel_description(op: BlockOperator) -> BlockSubspace:
    """Ker φ = ⊕ Ker φᵢ, one kernel per head block plus the tail pattern."""
    return BlockSubspace(
        head=tuple(kernel_basis(block) for block in op.head_blocks),
        tail=kernel_basis(op.tail_block),
        head_dim=op.head_dim,
    )


def image_description(op: BlockOperator) -> BlockSubspace:
    """Im φ = ⊕ Im φᵢ, one image per head block plus the tail pattern."""
    return BlockSubspace(
        head=tuple(image_basis(block) for block in op.head_blocks),
        tail=image_basis(op.tail_block),
        head_dim=op.head_dim,
    )
