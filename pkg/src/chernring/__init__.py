"""Exact Chern-class calculus and the universal Riemann-Roch polynomials.

Modules:

* :mod:`chernring.arith` -- rationals and integer-valued polynomials in ``t0``
* :mod:`chernring.series` -- truncated weighted multivariate series
* :mod:`chernring.symfunc` -- elementary-basis conversion, Newton, ``star0``
* :mod:`chernring.chern` -- virtual bundles, ``ch`` and Todd classes
* :mod:`chernring.universal` -- the universal polynomials ``P_{n,r}``
* :mod:`chernring.bundlering` -- the ring of ``P(E + 1)`` and zero-section checks
"""
from .arith import IVPoly, T0, Rational, ivpoly_binomial, ivpoly_eval, ivpoly_mul
from .series import (
    ContextMismatch,
    NotDivisible,
    Series,
    TruncationError,
    VarTable,
    graded_component,
)
from .symfunc import Alphabet, NotSymmetric, elementary, star0, subset_product, to_elementary_basis
from .chern import (
    VirtualBundle,
    chern_character,
    chern_character_from_roots,
    dual,
    exterior_power,
    lambda_minus_one_dual,
    star,
    todd,
    whitney_sum,
)
from .universal import (
    koszul_quotient_series,
    koszul_series,
    koszul_twist_series,
    normalized_twist_series,
    rr_homogeneous_part,
    universal_rr_polynomial,
)
from .bundlering import ProjectiveModel, RingClass

__version__ = "0.1.0"

__all__ = [
    "IVPoly", "T0", "Rational", "ivpoly_binomial", "ivpoly_eval", "ivpoly_mul",
    "ContextMismatch", "NotDivisible", "Series", "TruncationError", "VarTable", "graded_component",
    "Alphabet", "NotSymmetric", "elementary", "star0", "subset_product", "to_elementary_basis",
    "VirtualBundle", "chern_character", "chern_character_from_roots", "dual", "exterior_power",
    "lambda_minus_one_dual", "star", "todd", "whitney_sum",
    "koszul_quotient_series", "koszul_series", "koszul_twist_series", "normalized_twist_series",
    "rr_homogeneous_part", "universal_rr_polynomial",
    "ProjectiveModel", "RingClass",
]
