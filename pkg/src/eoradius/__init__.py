"""Euclidean operator radius toolkit.

Computes the numerical radius, the Euclidean operator norm and the
Euclidean operator radius of d-tuples of complex matrices, evaluates a
family of closed-form upper bounds for them (including bounds for
entrywise products and for block operator matrices), and verifies every
bound with seeded random-matrix suites backed by brute-force oracles.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import (
    ConfigError,
    DomainError,
    EoradiusError,
    ParseError,
    PreconditionError,
    ShapeError,
    UnsupportedError,
)
from .matfun import (
    SpectralFunctionPair,
    abs_adjoint_pow,
    abs_pow,
    op_norm,
    polar_unitary,
    power_pair,
    spectral_apply,
    spectral_radius_mat,
    sqrt_pair,
)
from .radii import (
    OperatorTuple,
    RadiusConfig,
    RadiusEstimate,
    SweepConfig,
    euclidean_radius,
    euclidean_radius_oracle,
    numerical_radius,
    numerical_radius_oracle,
    tuple_op_norm,
)
from .bounds import (
    BoundReport,
    abstract_bound,
    block_dominance_bounds,
    commuting_fg_bound,
    fg_polar_bounds,
    imaginary_combo_bound,
    imaginary_combo_product_bound,
    polar_power_bounds,
    product_bounds,
    product_quarter_bound,
    quarter_polar_bound,
    recompute_value,
    remark_bound,
    sandwich,
)
from .blockmat import (
    BlockOperatorMatrix,
    ComparisonMatrix,
    assemble,
    block_radius_bound,
    comparison_matrix,
    nonneg_numrad,
    two_by_two_bounds,
)
from .verify import (
    GeneratorSpec,
    SuiteConfig,
    VerificationRecord,
    check_lemmas,
    generate,
    run_suite,
    tightness_report,
)

__all__ = [
    "BACKEND",
    "BlockOperatorMatrix",
    "BoundReport",
    "ComparisonMatrix",
    "ConfigError",
    "DomainError",
    "EoradiusError",
    "GeneratorSpec",
    "OperatorTuple",
    "ParseError",
    "PreconditionError",
    "RadiusConfig",
    "RadiusEstimate",
    "ShapeError",
    "SpectralFunctionPair",
    "SuiteConfig",
    "SweepConfig",
    "UnsupportedError",
    "VerificationRecord",
    "abs_adjoint_pow",
    "abs_pow",
    "abstract_bound",
    "assemble",
    "block_dominance_bounds",
    "block_radius_bound",
    "check_lemmas",
    "commuting_fg_bound",
    "comparison_matrix",
    "euclidean_radius",
    "euclidean_radius_oracle",
    "fg_polar_bounds",
    "generate",
    "imaginary_combo_bound",
    "imaginary_combo_product_bound",
    "nonneg_numrad",
    "numerical_radius",
    "numerical_radius_oracle",
    "op_norm",
    "polar_power_bounds",
    "polar_unitary",
    "power_pair",
    "product_bounds",
    "product_quarter_bound",
    "quarter_polar_bound",
    "recompute_value",
    "remark_bound",
    "run_suite",
    "sandwich",
    "spectral_apply",
    "spectral_radius_mat",
    "sqrt_pair",
    "tightness_report",
    "tuple_op_norm",
    "two_by_two_bounds",
]
