"""Exact spectral calculus on the non-archimedean sequence space c0.

Everything is computed in the Laurent-series field Q((t)) with exact
rational coefficients; norms exist only as valuations and every identity
asserted by the test suite holds exactly, not approximately.
"""

from .c0space import (CANONICAL, OrthonormalFamily, Vector, gram_schmidt,
                      inner_product, project, sup_norm)
from .errors import UltraspecError
from .gelfand import (NStarFunction, SpectralOperator, alg_combine,
                      apply_spectral, eigendecompose, function_norm,
                      gelfand_transform, inverse_gelfand, op_norm, power,
                      spectral_norm, to_matrix)
from .kfield import (DEFAULT_PRECISION, INFINITE, NormValue, Scalar, divide,
                     format_scalar, min_valuation, parse_scalar)
from .lt_subalgebra import (Idempotent, MembershipResult, SigmaClopen,
                            Spectrum, ValueTable, classify_idempotent,
                            membership, poly_eval, resolvent, sigma_integrate,
                            sigma_measure, spectrum_of)
from .nstar_measure import (INFINITY_POINT, Clopen, MatrixRep,
                            ScalarMeasureView, TaggedPartition,
                            clopen_algebra, integrate, matrix_rep, measure,
                            refinement_chain, riemann_sum,
                            scalar_integrate, scalar_measure_value)
from .operators import (ClassCertificate, MatrixOperator, adjoint, apply,
                        certify_class, compose, hs_inner, operator_norm,
                        summing_functional_matrix)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL", "ClassCertificate", "Clopen", "DEFAULT_PRECISION",
    "INFINITE", "INFINITY_POINT", "Idempotent", "MatrixOperator",
    "MatrixRep", "MembershipResult", "NStarFunction", "NormValue",
    "OrthonormalFamily", "Scalar", "ScalarMeasureView", "SigmaClopen",
    "SpectralOperator", "Spectrum", "TaggedPartition", "UltraspecError",
    "ValueTable", "Vector", "adjoint", "alg_combine", "apply",
    "apply_spectral", "certify_class", "classify_idempotent",
    "clopen_algebra", "compose", "divide", "eigendecompose",
    "format_scalar", "function_norm", "gelfand_transform", "gram_schmidt",
    "hs_inner", "inner_product", "integrate", "inverse_gelfand",
    "matrix_rep", "measure", "membership", "min_valuation", "op_norm",
    "operator_norm", "parse_scalar", "poly_eval", "power", "project",
    "refinement_chain", "resolvent", "riemann_sum", "scalar_integrate",
    "scalar_measure_value", "sigma_integrate", "sigma_measure",
    "spectral_norm", "spectrum_of", "summing_functional_matrix",
    "sup_norm", "to_matrix",
]
