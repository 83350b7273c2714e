"""Property-based checks of the Moore-Penrose identities on random exact matrices."""

from hypothesis import given, settings
from hypothesis import strategies as st

from penrose.decomposition.invariant import blockwise_rgi
from penrose.linalg.matrix import Matrix, inverse
from penrose.linalg.pseudoinverse import (
    image_projector,
    kernel_projector,
    mp_inverse,
    mp_inverse_geometric,
    verify_penrose,
    verify_reflexive,
)
from penrose.linalg.subspace import Subspace, image_basis, kernel_basis, orthogonal_complement

from strategies import invariant_decompositions, invertible_matrices, matrices


@settings(max_examples=500, deadline=None)
@given(matrices())
def test_penrose_identities_hold_exactly(A):
    X = mp_inverse(A)
    assert tuple(verify_penrose(A, X)) == (True, True, True, True)
    assert mp_inverse_geometric(A) == X
    assert mp_inverse(X) == A


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=4, max_cols=4, complex_entries=True))
def test_complex_matrices(A):
    X = mp_inverse(A)
    assert verify_penrose(A, X).moore_penrose
    assert mp_inverse_geometric(A) == X


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=6, max_cols=6))
def test_projection_identities(A):
    X = mp_inverse(A)
    P, Q = X @ A, A @ X
    assert P @ P == P
    assert Q @ Q == Q
    assert P == kernel_projector(A)
    assert Q == image_projector(A)
    coimage = orthogonal_complement(kernel_basis(A), Subspace.full(A.cols))
    if coimage.dim:
        assert image_basis(P) == coimage
        assert image_basis(Q) == image_basis(A)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(invertible_matrices))
def test_nonsingular_inverse(A):
    X = mp_inverse(A)
    assert X == inverse(A)
    assert X @ A == Matrix.identity(A.rows)


@settings(max_examples=40, deadline=None)
@given(invariant_decompositions(max_dim=5, kind="skew"))
def test_reflexive_inverses_other_than_pinv_fail_self_adjointness(case):
    A, D, _ = case
    X = blockwise_rgi(A, D)
    assert verify_reflexive(A, X)
    if X != mp_inverse(A):
        conditions = verify_penrose(A, X)
        assert not (conditions.ax_self_adjoint and conditions.xa_self_adjoint)
