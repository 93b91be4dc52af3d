"""Exact Gromov-Hausdorff and 1D Euclidean-Hausdorff distances, plus executable
coarse-geometry constructions (embeddings, asymptotic-dimension covers,
Assouad witness families)."""
from ._backend import BACKEND
from .errors import (
    AxiomViolation,
    CertificateUnavailable,
    ClassCountMismatch,
    GuardExceeded,
    HypothesisViolated,
    InvalidCorrespondence,
    OverflowGuard,
    PreconditionFailed,
    SizeGuardExceeded,
)
from .gromov import (
    Correspondence,
    GHResult,
    distortion,
    gh_bruteforce,
    gh_exact,
    lower_bound_diameter,
    lower_bound_distance_set,
    network_distance,
)
from .hausdorff1d import Alignment, candidate_shifts, eh_distance, eh_grid_oracle, hausdorff
from .metric import (
    DistanceSet,
    FiniteMetricSpace,
    Network,
    Point1DSet,
    PseudoSemiMetricNetwork,
    distance_set,
    from_point_set,
    kuratowski_embed,
    quantization_image_bound,
    quantize_network,
    validate_metric,
)

__version__ = "0.1.0"
