"""Exception hierarchy for penrose."""


class PenroseError(Exception):
    """Base class for every error raised by the package."""


class DimensionError(PenroseError):
    """Operands have incompatible shapes or an index exceeds a dimension."""


class ContainmentError(PenroseError):
    """A subspace is not contained in the subspace it must live in."""


class DecompositionError(PenroseError):
    """A family of subspaces is not an invariant direct-sum decomposition."""


class GeometryError(PenroseError):
    """Two block operators do not share the same block geometry."""


class ZeroMapError(PenroseError):
    """The zero map has no full-rank factorization."""


class SingularMatrixError(PenroseError):
    """A matrix that must be invertible is singular."""


class GramFormError(PenroseError):
    """A Gram matrix is not Hermitian or not positive definite."""


class ParseError(PenroseError):
    """An input document could not be parsed.

    ``location`` names the offending line/column or field path.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
