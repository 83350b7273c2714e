"""Tests for exact matrices, subspaces and Moore-Penrose inverses of finite matrices."""

import pytest

from penrose.core.gram import GramForm, inner_product
from penrose.core.scalar import Scalar
from penrose.errors import ContainmentError, DimensionError, SingularMatrixError, ZeroMapError
from penrose.linalg.matrix import Matrix, determinant, fraction_matrix, inverse, rank, rref
from penrose.linalg.pseudoinverse import (
    adjoint,
    full_rank_factorization,
    image_projector,
    kernel_projector,
    mp_inverse,
    mp_inverse_geometric,
    verify_penrose,
    verify_reflexive,
)
from penrose.linalg.subspace import (
    Subspace,
    image_basis,
    kernel_basis,
    orthogonal_complement,
)

from strategies import vec


class TestMatrix:
    def test_rref_identity_and_zero(self):
        identity = Matrix.identity(3)
        assert rref(identity) == (identity, [0, 1, 2])
        zero = Matrix.zeros(2, 2)
        assert rref(zero) == (zero, [])

    def test_rref_skew_matrix(self, skew_matrix):
        reduced, pivots = rref(skew_matrix)
        assert pivots == [0, 3]
        assert reduced == fraction_matrix(
            [[1, 1, -2, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]
        )

    def test_inverse_and_determinant(self):
        A = fraction_matrix([[2, 1], [1, 1]])
        assert inverse(A) == fraction_matrix([[1, -1], [-1, 2]])
        assert determinant(A) == 1
        with pytest.raises(SingularMatrixError):
            inverse(fraction_matrix([[1, 2], [2, 4]]))

    def test_shape_errors(self):
        with pytest.raises(DimensionError):
            Matrix([[1, 2], [3]])
        with pytest.raises(DimensionError):
            Matrix.identity(2) @ Matrix.identity(3)

    def test_conjugate_transpose(self):
        A = fraction_matrix([["i", 1], [0, "2-i"]])
        assert A.H == fraction_matrix([["-i", 0], [1, "2+i"]])


class TestSubspace:
    def test_kernel_and_image_of_skew_matrix(self, skew_matrix):
        kernel = kernel_basis(skew_matrix)
        image = image_basis(skew_matrix)
        assert kernel == Subspace(4, [vec((1, 1), (2, -1)), vec((1, 1), (2, 1), (3, 1))])
        assert image == Subspace(4, [vec((1, 1)), vec((1, 1), (2, 1), (3, 1))])
        assert kernel.dim + image.dim == 4

    def test_identity_kernel_and_image(self):
        assert kernel_basis(Matrix.identity(3)) == Subspace.zero(3)
        assert image_basis(Matrix.identity(3)) == Subspace.full(3)

    def test_dependent_basis_rejected(self):
        with pytest.raises(DimensionError):
            Subspace(3, [vec((1, 1)), vec((1, 2))])

    def test_equality_ignores_basis_choice(self):
        assert Subspace(3, [vec((1, 1)), vec((2, 1))]) == Subspace(
            3, [vec((1, 1), (2, 1)), vec((1, 1), (2, -1))]
        )
        assert Subspace(3, [vec((1, 1))]) != Subspace(3, [vec((2, 1))])

    def test_relative_complement(self):
        H2 = Subspace(4, [vec((1, 1), (2, 1), (3, 1)), vec((4, 1))])
        image = Subspace(4, [vec((1, 1), (2, 1), (3, 1))])
        assert orthogonal_complement(image, H2) == Subspace(4, [vec((4, 1))])

    def test_complement_of_kernel(self, skew_matrix):
        complement = orthogonal_complement(kernel_basis(skew_matrix), Subspace.full(4))
        assert complement == Subspace(4, [vec((1, 1), (2, 1), (3, -2)), vec((4, 1))])

    def test_complement_edge_cases(self):
        H = Subspace(3, [vec((1, 1)), vec((2, 1))])
        assert orthogonal_complement(H, H) == Subspace.zero(3)
        assert orthogonal_complement(Subspace.zero(3), H) == H
        with pytest.raises(ContainmentError):
            orthogonal_complement(Subspace(3, [vec((3, 1))]), H)

    def test_complement_under_gram_form(self):
        g = GramForm(fraction_matrix([[2, 1], [1, 2]]))
        complement = orthogonal_complement(Subspace(2, [vec((1, 1))]), Subspace.full(2), g)
        # g(e1, a·e1 + b·e2) = 2a + b
        assert complement == Subspace(2, [vec((1, 1), (2, -2))])


class TestAdjoint:
    def test_orthonormal_adjoint_is_conjugate_transpose(self):
        A = fraction_matrix([[1, "i"], [2, 3]])
        assert adjoint(A) == A.H
        assert adjoint(fraction_matrix([["i"]])) == fraction_matrix([["-i"]])
        assert adjoint(Matrix.identity(3)) == Matrix.identity(3)

    def test_defining_identity_with_gram_forms(self):
        A = fraction_matrix([[1, 2, 0], [0, 1, "i"]])
        gV = GramForm(fraction_matrix([[2, 1, 0], [1, 2, 0], [0, 0, 1]]))
        gW = GramForm(fraction_matrix([["3", "i"], ["-i", "1"]]))
        A_star = adjoint(A, gV, gW)
        for v in [vec((1, 1)), vec((2, 1)), vec((3, 1))]:
            for w in [vec((1, 1)), vec((2, 1))]:
                assert inner_product(v, A_star.apply_sparse(w), gV) == inner_product(
                    A.apply_sparse(v), w, gW
                )

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            adjoint(Matrix.identity(2), GramForm.identity(3))


class TestPseudoinverse:
    def test_full_rank_factorization(self, skew_matrix):
        F, G = full_rank_factorization(skew_matrix)
        assert F == Matrix.from_columns([[1, 0, 0, 0], [1, 1, 1, 0]])
        assert F @ G == skew_matrix
        F, G = full_rank_factorization(fraction_matrix([[1, 1], [0, 0]]))
        assert F == fraction_matrix([[1], [0]])
        assert G == fraction_matrix([[1, 1]])
        assert full_rank_factorization(Matrix.identity(2)) == (Matrix.identity(2),) * 2
        with pytest.raises(ZeroMapError):
            full_rank_factorization(Matrix.zeros(2, 3))

    def test_skew_matrix_inverse(self, skew_matrix, skew_pinv):
        assert mp_inverse(skew_matrix) == skew_pinv
        assert mp_inverse_geometric(skew_matrix) == skew_pinv
        assert skew_pinv.column(0) == tuple(
            Scalar.parse(x) for x in ["1/6", "1/6", "-1/3", "0"]
        )

    def test_zero_and_nonsingular(self):
        assert mp_inverse(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)
        assert mp_inverse_geometric(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)
        A = fraction_matrix([[2, 1], [1, 1]])
        assert mp_inverse(A) == inverse(A)
        g = GramForm(fraction_matrix([[2, 1], [1, 2]]))
        assert mp_inverse_geometric(A, g, GramForm.identity(2)) == inverse(A)

    def test_penrose_conditions(self, skew_matrix, skew_pinv, skew_rgi):
        assert tuple(verify_penrose(skew_matrix, skew_pinv)) == (True, True, True, True)
        assert tuple(verify_penrose(skew_matrix, skew_rgi)) == (True, True, False, False)
        assert verify_penrose(Matrix.identity(3), Matrix.identity(3)).moore_penrose

    def test_reflexive(self, skew_matrix, skew_pinv, skew_rgi):
        assert verify_reflexive(skew_matrix, skew_pinv)
        assert verify_reflexive(skew_matrix, skew_rgi)
        assert not verify_reflexive(skew_matrix, Matrix.zeros(4, 4))

    def test_candidate_shape_checked(self, skew_matrix):
        with pytest.raises(DimensionError):
            verify_penrose(skew_matrix, Matrix.zeros(3, 4))

    def test_geometric_inverse_with_gram_forms(self, skew_matrix):
        gV = GramForm(
            fraction_matrix([[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 3]])
        )
        gW = GramForm(
            fraction_matrix([[1, 0, 0, 0], [0, 2, 1, 0], [0, 1, 2, 0], [0, 0, 0, 1]])
        )
        X = mp_inverse_geometric(skew_matrix, gV, gW)
        assert verify_penrose(skew_matrix, X, gV, gW).moore_penrose
        assert X @ skew_matrix == kernel_projector(skew_matrix, gV)
        assert skew_matrix @ X == image_projector(skew_matrix, gW)
        # a different inner product gives a different inverse
        assert X != mp_inverse(skew_matrix)

    def test_projectors(self, skew_matrix, skew_pinv):
        P = kernel_projector(skew_matrix)
        Q = image_projector(skew_matrix)
        assert skew_pinv @ skew_matrix == P
        assert skew_matrix @ skew_pinv == Q
        assert P @ P == P
        assert rank(Q) == 2
