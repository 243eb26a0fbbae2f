"""Exact computations with finite-dimensional Bol algebras over the rationals."""

from .algebra import (
    BolAlgebra,
    LieAlgebra,
    check_axioms,
    check_lts,
    d_matrix,
    evaluate,
    from_lie_algebra,
    from_lie_pair,
    jacobi_check,
    opposite,
    residual,
    standard_subspace,
)
from .duality import (
    BUILTINS,
    check_builtin,
    check_identity,
    dual_module,
    dualize_identity,
    opposite_rep,
    parse_identity,
)
from .envelope import build_envelope, recovered_algebra, roundtrip, verify_envelope
from .errors import (
    BolalgError,
    DimensionError,
    FormatError,
    IdentitySyntaxError,
    PreconditionError,
    QuotientError,
)
from .ideals import (
    Morphism,
    coequalizer,
    equalizer,
    factor_colimit,
    factor_limit,
    first_iso,
    ideal_closure,
    is_ideal,
    is_morphism,
    is_subalgebra,
    kernel_image,
    product,
    quotient,
)
from .linalg import Matrix, Subspace, span
from .modules import (
    BolModule,
    check_module,
    check_p_properties,
    check_prop_composite,
    direct_sum,
    extension_algebra,
    regular_module,
)
from .pder import companions_of, inner_pder_span, pder_solve
from .report import Check, CheckReport, Report

__version__ = "0.1.0"
