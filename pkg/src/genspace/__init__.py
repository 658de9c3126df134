"""Exact-arithmetic generic spaces for finite discrete distributions.

The package turns a distribution of rational probabilities into its
minimal uniform "generic space", and builds on that construction:
combinatorial-volume entropy identities, effective dimension, optimal
prefix coding in the dyadic case, a geometric (Born-rule) probability
model, and elementary information-inequality checks.
"""

from .born import (
    DensityMatrix,
    DensityValidation,
    JspsVector,
    MeasurementSet,
    born_probability,
    collapse_jsps,
    jacobi_eigenvalues,
    jsps_from_distribution,
    measure,
    sample,
    validate_density,
)
from .coding import (
    CodeStats,
    DecodeError,
    PrefixCode,
    average_length,
    build_generic_code,
    decode,
    encode,
    frame_bits,
    huffman_oracle,
    unframe_bits,
)
from .distribution import (
    ExactDistribution,
    GenericSpace,
    collapse,
    format_distribution,
    generic_space,
    parse_distribution,
    tensor_product,
)
from .entropy import (
    EntropySuite,
    VolumeReport,
    combinatorial_volumes,
    effective_dimension,
    entropy_suite,
    projection_entropy,
    projection_ratio,
    renyi_entropy,
    shannon_entropy,
    shannon_via_ratio,
    tsallis_entropy,
)
from .joint import (
    InequalityReport,
    JointDistribution,
    check_inequalities,
    conditional_entropy,
    joint_entropy,
    marginals,
    mutual_information,
    product_joint,
)

__version__ = "0.1.0"

__all__ = [
    "ExactDistribution",
    "GenericSpace",
    "parse_distribution",
    "format_distribution",
    "generic_space",
    "collapse",
    "tensor_product",
    "VolumeReport",
    "EntropySuite",
    "combinatorial_volumes",
    "shannon_entropy",
    "shannon_via_ratio",
    "effective_dimension",
    "renyi_entropy",
    "tsallis_entropy",
    "projection_ratio",
    "projection_entropy",
    "entropy_suite",
    "JspsVector",
    "DensityMatrix",
    "DensityValidation",
    "MeasurementSet",
    "jsps_from_distribution",
    "collapse_jsps",
    "born_probability",
    "measure",
    "validate_density",
    "jacobi_eigenvalues",
    "sample",
    "PrefixCode",
    "CodeStats",
    "DecodeError",
    "build_generic_code",
    "encode",
    "decode",
    "average_length",
    "huffman_oracle",
    "frame_bits",
    "unframe_bits",
    "JointDistribution",
    "InequalityReport",
    "product_joint",
    "marginals",
    "joint_entropy",
    "conditional_entropy",
    "mutual_information",
    "check_inequalities",
]
