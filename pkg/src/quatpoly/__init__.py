"""Quaternion left polynomials: algebra, Jacobians, Cauchy-Riemann structure and roots."""

from .errors import QuatPolyError
from .jacobian import (COMPLEX_STRUCTURE, Jacobian4, cr_check_complex, cr_check_general,
                       cr_check_real, det_I_plus_CA, jacobian_at, jacobian_det, lemma31_checks,
                       nonnegativity_scan, power_identity_checks, structural_at_i)
from .qpoly import (QPolynomial, qp_conj, qp_div_linear, qp_div_real_quadratic, qp_eval,
                    qp_is_primitive, qp_mul, qp_norm_poly)
from .quaternion import (I, J, K, ONE, ZERO, Quaternion, char_poly, conj, find_gamma, inv,
                         is_similar, mul, norm, norm2, rotation_matrix, to_matrix)
from .realpoly import MPoly4, RPoly, complex_roots, rpoly_gcd
from .roots import RootKind, RootRecord, find_roots, has_spherical_root, local_degrees, multiplicity
from .textformat import format_polynomial, format_quaternion, parse_polynomial, parse_quaternion

__all__ = [
    "COMPLEX_STRUCTURE", "I", "J", "K", "ONE", "ZERO", "Jacobian4", "MPoly4", "QPolynomial",
    "QuatPolyError", "Quaternion", "RPoly", "RootKind", "RootRecord", "char_poly",
    "complex_roots", "conj", "cr_check_complex", "cr_check_general", "cr_check_real",
    "det_I_plus_CA", "find_gamma", "find_roots", "format_polynomial", "format_quaternion",
    "has_spherical_root", "inv", "is_similar", "jacobian_at", "jacobian_det", "lemma31_checks",
    "local_degrees", "mul", "multiplicity", "nonnegativity_scan", "norm", "norm2",
    "parse_polynomial", "parse_quaternion", "qp_conj", "qp_div_linear", "qp_div_real_quadratic",
    "qp_eval", "qp_is_primitive", "qp_mul", "qp_norm_poly", "rotation_matrix", "rpoly_gcd",
    "structural_at_i", "to_matrix", "power_identity_checks",
]
