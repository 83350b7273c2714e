"""Shared fixtures: the worked examples as domain objects."""

import os
import tempfile
from pathlib import Path

# Keep log files out of the working tree; must precede the first penrose import
os.environ.setdefault("PENROSE_LOG_DIR", tempfile.mkdtemp(prefix="penrose-logs-"))

import pytest  # noqa: E402

from penrose.decomposition.invariant import InvariantDecomposition  # noqa: E402
from penrose.linalg.matrix import Matrix, fraction_matrix  # noqa: E402
from penrose.linalg.subspace import Subspace  # noqa: E402
from penrose.operators.block_operator import BlockOperator  # noqa: E402
from penrose.utils.serialization import (  # noqa: E402
    load_document,
    matrix_from_document,
    operator_from_document,
)
from strategies import vec  # noqa: E402

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def skew_matrix() -> Matrix:
    return matrix_from_document(load_document(FIXTURES / "skew_matrix.json"))


@pytest.fixture
def skew_pinv() -> Matrix:
    return matrix_from_document(load_document(FIXTURES / "skew_pinv.json"))


@pytest.fixture
def skew_rgi() -> Matrix:
    return matrix_from_document(load_document(FIXTURES / "skew_rgi.json"))


@pytest.fixture
def skew_decomposition() -> InvariantDecomposition:
    return InvariantDecomposition(
        4,
        [
            Subspace(4, [vec((1, 1)), vec((2, 1))]),
            Subspace(4, [vec((1, 1), (2, 1), (3, 1)), vec((4, 1))]),
        ],
    )


@pytest.fixture
def phi() -> BlockOperator:
    return operator_from_document(load_document(FIXTURES / "phi_operator.json"))


@pytest.fixture
def phi_pinv() -> BlockOperator:
    return operator_from_document(load_document(FIXTURES / "phi_pinv.json"))


@pytest.fixture
def phi_tail_pinv() -> Matrix:
    return fraction_matrix(
        [
            ["5/3", "1/3", 0, "5/6", "-1/3"],
            [0, 0, 0, 0, 0],
            [0, 0, 0, "1/2", 0],
            [0, 0, 0, 0, 1],
            [-1, 0, 0, "-1/2", 0],
        ]
    )
