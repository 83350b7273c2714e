"""Dense exact matrices over the Gaussian rationals and Gauss-Jordan elimination."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from ..core.scalar import ONE, ZERO, Scalar, ScalarLike
from ..core.vector import SparseVector
from ..errors import DimensionError, SingularMatrixError


Row = tuple[Scalar, ...]


class Matrix:
    """An immutable rows×cols array of Scalars (rows, cols ≥ 1).

    Positions are 0-based. Column ``j`` of a matrix acting on a coordinate
    window is the image of the ``j``-th basis vector of that window.
    """

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable[ScalarLike]]):
        data = tuple(tuple(Scalar.of(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("matrix rows have different lengths")
        self._rows: tuple[Row, ...] = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]]) -> Matrix:
        if not columns:
            raise DimensionError("a matrix needs at least one column")
        height = len(columns[0])
        return cls([[column[i] for column in columns] for i in range(height)])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def block_diagonal(cls, blocks: Sequence[Matrix]) -> Matrix:
        """Place ``blocks`` along the diagonal, zeros elsewhere."""
        total_rows = sum(b.rows for b in blocks)
        total_cols = sum(b.cols for b in blocks)
        data = [[ZERO] * total_cols for _ in range(total_rows)]
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block._rows):
                data[r0 + i][c0 : c0 + block.cols] = row
            r0 += block.rows
            c0 += block.cols
        return cls(data)

    # Access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, position: tuple[int, int]) -> Scalar:
        i, j = position
        return self._rows[i][j]

    def row(self, i: int) -> Row:
        return self._rows[i]

    def column(self, j: int) -> Row:
        return tuple(row[j] for row in self._rows)

    def to_lists(self) -> list[list[Scalar]]:
        return [list(row) for row in self._rows]

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> Matrix:
        return Matrix([[self._rows[i][j] for j in col_indices] for i in row_indices])

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for row in self._rows for x in row)

    # Algebra

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = list(zip(*other._rows))
        return Matrix(
            [[_dot(row, column) for column in other_cols] for row in self._rows]
        )

    def apply(self, vector: Sequence[Scalar]) -> list[Scalar]:
        """Matrix-vector product on a dense coordinate list."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        return [_dot(row, vector) for row in self._rows]

    def apply_sparse(self, vector: SparseVector, offset: int = 0) -> SparseVector:
        """Act on the coordinate window ``offset+1 .. offset+cols`` of ``vector``."""
        image = self.apply(vector.to_dense(self.cols, offset))
        return SparseVector.from_dense(image, offset)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in row] for row in self._rows])

    def __mul__(self, scalar: ScalarLike) -> Matrix:
        scalar = Scalar.of(scalar)
        return Matrix([[a * scalar for a in row] for row in self._rows])

    __rmul__ = __mul__

    def conj(self) -> Matrix:
        return Matrix([[a.conj() for a in row] for row in self._rows])

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self._rows))

    @property
    def H(self) -> Matrix:
        """Conjugate transpose."""
        return Matrix([[a.conj() for a in column] for column in zip(*self._rows)])

    def power(self, n: int) -> Matrix:
        if not self.is_square:
            raise DimensionError("only square matrices have powers")
        if n < 0:
            raise DimensionError(f"matrix power needs a nonnegative exponent, got {n}")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"Matrix([{body}])"


def _dot(row: Sequence[Scalar], column: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for a, b in zip(row, column):
        if a and b:
            total = total + a * b
    return total


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form by exact Gauss-Jordan elimination.

    The pivot of each column is the first nonzero entry at or below the
    current row; no other pivoting is needed in exact arithmetic. Returns the
    reduced matrix and the 0-based pivot columns in order.
    """
    work = matrix.to_lists()
    pivots = _eliminate(work, matrix.cols)
    return Matrix(work), pivots


def _eliminate(work: list[list[Scalar]], ncols: int) -> list[int]:
    """Reduce ``work`` in place over its first ``ncols`` columns."""
    pivots: list[int] = []
    lead = 0
    nrows = len(work)
    for col in range(ncols):
        if lead == nrows:
            break
        pivot_row = next((r for r in range(lead, nrows) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[lead], work[pivot_row] = work[pivot_row], work[lead]
        pivot = work[lead][col]
        if pivot != ONE:
            work[lead] = [x / pivot for x in work[lead]]
        pivot_values = work[lead]
        for r in range(nrows):
            factor = work[r][col]
            if r != lead and factor:
                work[r] = [x - factor * p for x, p in zip(work[r], pivot_values)]
        pivots.append(col)
        lead += 1
    return pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def rank_of_vectors(vectors: Sequence[SparseVector], dim: int) -> int:
    """Rank of the matrix whose columns are ``vectors`` in coordinates 1..dim."""
    if not vectors:
        return 0
    return rank(Matrix.from_columns([v.to_dense(dim) for v in vectors]))


def null_space(matrix: Matrix) -> list[list[Scalar]]:
    """Dense basis of {x : matrix·x = 0}, one vector per free column."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        x = [ZERO] * matrix.cols
        x[free] = ONE
        for r, p in enumerate(pivots):
            x[p] = -reduced[r, free]
        basis.append(x)
    return basis


def inverse(matrix: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan on [A | I]."""
    if not matrix.is_square:
        raise DimensionError(f"cannot invert a non-square {matrix.shape} matrix")
    n = matrix.rows
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in
            enumerate(matrix.to_lists())]
    pivots = _eliminate(work, n)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    return Matrix([row[n:] for row in work])


def determinant(matrix: Matrix) -> Scalar:
    """Exact determinant by elimination with row-swap sign tracking."""
    if not matrix.is_square:
        raise DimensionError("determinant of a non-square matrix")
    work = matrix.to_lists()
    n = matrix.rows
    det = ONE
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col]), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            factor = work[r][col] / pivot
            if factor:
                work[r] = [x - factor * p for x, p in zip(work[r], work[col])]
    return det


def solve_full_column_rank(basis: Matrix, targets: Matrix) -> Matrix | None:
    """Solve basis·X = targets for a basis of full column rank.

    Returns None when some target column is outside the column space.
    """
    if basis.rows != targets.rows:
        raise DimensionError("basis and targets need the same row count")
    n = basis.cols
    work = [list(b) + list(t) for b, t in zip(basis.to_lists(), targets.to_lists())]
    pivots = _eliminate(work, n)
    if pivots != list(range(n)):
        raise SingularMatrixError("basis columns are linearly dependent")
    if any(x for row in work[n:] for x in row[n:]):
        return None
    return Matrix([row[n:] for row in work[:n]])


def fraction_matrix(rows: Iterable[Iterable[int | Fraction | str]]) -> Matrix:
    """Build a Matrix from ints, Fractions or scalar strings."""
    return Matrix(
        [[Scalar.parse(x) if isinstance(x, str) else Scalar.of(x) for x in row] for row in rows]
    )
