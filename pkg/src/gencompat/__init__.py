"""Exact verification of generalized (para)complex structures compatible with a metric.

Everything is computed over the rationals (and the quadratic extensions by
``i`` and ``eps``); there is no floating point anywhere.
"""

from .catalog import CATALOG_NAMES, CatalogEntry, catalog_all, catalog_get, verify_entry
from .exactla import Matrix, QuadScalar, rank, rref, rref_kernel, signature_of_symmetric, to_rational
from .extended import (
    ClassicalForm,
    CurveSpec,
    ExtendedSpace,
    GenStructure,
    PseudoMetric,
    build_extended,
    build_extremal,
    curve_point,
    eigenspace_involutivity,
    extract_extremal,
    from_classical,
    nijenhuis_integrability,
    to_classical,
    verify_algebraic,
)
from .liealg import LieAlgebra, cotangent_algebra, from_brackets, jacobi_check, parse_salamon, serialize_salamon
from .report import Report
from .twistor import (
    beta_signature,
    bk_gram,
    char_condition,
    model_point,
    orbit_dimension_check,
    split_admissibility,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG_NAMES",
    "CatalogEntry",
    "ClassicalForm",
    "CurveSpec",
    "ExtendedSpace",
    "GenStructure",
    "LieAlgebra",
    "Matrix",
    "PseudoMetric",
    "QuadScalar",
    "Report",
    "beta_signature",
    "bk_gram",
    "build_extended",
    "build_extremal",
    "catalog_all",
    "catalog_get",
    "char_condition",
    "cotangent_algebra",
    "curve_point",
    "eigenspace_involutivity",
    "extract_extremal",
    "from_brackets",
    "from_classical",
    "jacobi_check",
    "model_point",
    "nijenhuis_integrability",
    "orbit_dimension_check",
    "parse_salamon",
    "rank",
    "rref",
    "rref_kernel",
    "serialize_salamon",
    "signature_of_symmetric",
    "split_admissibility",
    "to_classical",
    "to_rational",
    "verify_algebraic",
    "verify_entry",
]
