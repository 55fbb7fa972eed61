"""Metrics on affinity-weighted graphs.

A symmetric nonnegative kernel induces nested threshold level sets; the
level index of a pair gives a dyadic quasi-metric, chaining tightens it
into a pseudo-metric, and the normalized spectral generator gives
diffusion distances.  Balls and annuli in any of these can be exported
as JSON or colored DOT graphs.
"""

from .balls import (
    PALETTE,
    AnnulusBands,
    BallResult,
    affinity_bands,
    annuli,
    ball_to_json,
    bands_to_dot,
    bands_to_json,
    delta_ball,
    distance_ball,
    euclidean_distances,
)
from .diffusion import (
    SpectralDecomposition,
    decomposition_from_json,
    decomposition_to_json,
    diffusion_distance_matrix,
    eig_symmetric,
    graph_laplacian,
    spectral_decomposition,
)
from .errors import (
    DegenerateVertexError,
    DomainError,
    GraphMetrizeError,
    InvalidParameterError,
    MatrixFormatError,
    NonMetrizableError,
    NumericError,
    SymmetryError,
)
from .kernels import (
    AffinityMatrix,
    ValidationReport,
    affinity_matrix,
    load_affinity,
    newtonian_kernel,
    read_matrix_csv,
    save_affinity,
    validate_kernel,
    write_matrix_csv,
)
from .metrize import (
    EquivalenceReport,
    LambdaSequence,
    PseudoMetricMatrix,
    QuasiMetricMatrix,
    SandwichReport,
    chain_metric,
    compute_lambda_sequence,
    delta_matrix,
    lambda_from_json,
    lambda_inverse,
    lambda_to_json,
    level_relations,
    quasi_triangle_constant,
    verify_equivalence,
    verify_sandwich,
)
from .relations import (
    BinaryRelation,
    compose,
    covering_index,
    empty_relation,
    full_relation,
    identity_relation,
    is_full,
    is_subset,
    is_symmetric,
    level_set,
    power3,
    relation_from_bits,
    relation_from_json,
    relation_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AffinityMatrix",
    "AnnulusBands",
    "BallResult",
    "BinaryRelation",
    "DegenerateVertexError",
    "DomainError",
    "EquivalenceReport",
    "GraphMetrizeError",
    "InvalidParameterError",
    "LambdaSequence",
    "MatrixFormatError",
    "NonMetrizableError",
    "NumericError",
    "PALETTE",
    "PseudoMetricMatrix",
    "QuasiMetricMatrix",
    "SandwichReport",
    "SpectralDecomposition",
    "SymmetryError",
    "ValidationReport",
    "affinity_bands",
    "affinity_matrix",
    "annuli",
    "ball_to_json",
    "bands_to_dot",
    "bands_to_json",
    "chain_metric",
    "compose",
    "compute_lambda_sequence",
    "covering_index",
    "decomposition_from_json",
    "decomposition_to_json",
    "delta_ball",
    "delta_matrix",
    "diffusion_distance_matrix",
    "distance_ball",
    "eig_symmetric",
    "empty_relation",
    "euclidean_distances",
    "full_relation",
    "graph_laplacian",
    "identity_relation",
    "is_full",
    "is_subset",
    "is_symmetric",
    "lambda_from_json",
    "lambda_inverse",
    "lambda_to_json",
    "level_relations",
    "level_set",
    "load_affinity",
    "newtonian_kernel",
    "power3",
    "quasi_triangle_constant",
    "read_matrix_csv",
    "relation_from_bits",
    "relation_from_json",
    "relation_to_json",
    "save_affinity",
    "spectral_decomposition",
    "validate_kernel",
    "verify_equivalence",
    "verify_sandwich",
    "write_matrix_csv",
]
