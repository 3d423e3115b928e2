"""Exact calculator for Alexander polynomials and equivariant mixed Hodge
numbers (spectral pairs) of complements and boundary manifolds of affine
hypersurfaces transversal at infinity with isolated singularities."""

from .boundary import (
    BoundaryInvariants,
    NegativeCount,
    NegativeExponent,
    OddDegree,
    ParityViolation,
    betti_and_jordan,
    boundary_alexander,
    boundary_pairs_arrangement,
    boundary_pairs_curve,
    boundary_pairs_nonunipotent,
    boundary_pairs_qhm,
    compute_boundary_invariants,
    error_term,
    flatten_weights,
    projective_curve_hodge,
    smooth_primitive_middle,
)
from .bounds import (
    BoundTable,
    NegativeMu,
    divisibility_bound_infinity,
    divisibility_bound_local,
    mhat,
    spectral_bound_arrangement,
    spectral_bound_complement,
    spectral_bound_curve,
)
from .laurent import (
    CyclotomicFactorization,
    LaurentPoly,
    NegativeMultiplicity,
    NotCyclotomicProduct,
    NotDivisible,
    cyclotomic,
    euler_phi,
    factor_roots_of_unity,
    t_power_minus_one,
)
from .localsing import (
    Brieskorn,
    Explicit,
    ExplicitHasNoSpectrum,
    LocalSingularity,
    MissingLocalHodgeData,
    Ordinary,
    branches,
    hodge_filtration_dims,
    local_alexander,
    local_pairs,
    milnor_number,
    spectrum,
)
from .milnor import (
    EnumerationTooLarge,
    milnor_dim,
    milnor_dim_bruteforce,
    steenbrink_infinity,
)
from .model import (
    Derived,
    HypersurfaceSpec,
    MalformedDocument,
    Violation,
    derived_quantities,
    parse_spec,
    serialize_spec,
    validate,
)
from .pairs import (
    SpectralPairTable,
    add_tables,
    conjugate_table,
    level_dual_table,
    total_dim,
)
from .report import (
    Check,
    InvalidSpec,
    InvariantReport,
    build_report,
    render_text,
    report_to_dict,
    report_to_json,
)

__version__ = "0.1.0"
