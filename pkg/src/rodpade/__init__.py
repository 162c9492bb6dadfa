"""Exact Rodrigues-style Pade-type approximants over Q.

Subpackages by layer: exact rational/polynomial/Laurent arithmetic
(:mod:`rodpade.exact`), the operator algebra (:mod:`rodpade.weyl`), moment
functionals and determinants (:mod:`rodpade.transform`), recurrence
extraction (:mod:`rodpade.holonomic`), the two applications
(:mod:`rodpade.mpl`, :mod:`rodpade.logpow`), and the arithmetic layer of
heights, audits and the independence criterion (:mod:`rodpade.criterion`).
"""

from .exact import INF, NEG_INF, LaurentTail, Poly, laurent_mul_poly, ord_inf
from .weyl import DiffOp, adjoint, op_apply, op_apply_laurent, op_compose, ord_weight, property_P

__all__ = [
    "INF",
    "NEG_INF",
    "LaurentTail",
    "Poly",
    "laurent_mul_poly",
    "ord_inf",
    "DiffOp",
    "adjoint",
    "op_apply",
    "op_apply_laurent",
    "op_compose",
    "ord_weight",
    "property_P",
]
