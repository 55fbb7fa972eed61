"""Exception types shared across the package."""


class GraphMetrizeError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidParameterError(GraphMetrizeError, ValueError):
    """A parameter sits outside its documented domain."""


class MatrixFormatError(GraphMetrizeError, ValueError):
    """An input matrix is malformed: not square, ragged, or non-numeric."""


class SymmetryError(MatrixFormatError):
    """An input matrix that must be symmetric is not."""


class DomainError(GraphMetrizeError, ValueError):
    """A value is outside the mathematical domain of an operation."""


class NonMetrizableError(GraphMetrizeError, ValueError):
    """The kernel fails a structural flag the level construction needs."""


class DegenerateVertexError(GraphMetrizeError, ValueError):
    """A vertex has zero total affinity, so degree normalization is undefined."""


class NumericError(GraphMetrizeError, RuntimeError):
    """A numerical procedure failed to converge within its budget."""
