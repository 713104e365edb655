"""Exact finite-field character sums."""

from .cyclotomic import CycNumber
from .finitefield import FiniteField, primitive_modulus
from .sums import (KAPPA_SQUARE_CLASS, SUPPORTED_D, JacobiDatum, JacobiEntry, MultChar, delta_g_membership, derivation_value,
                   gauss_sum, gauss_table, jacobi_sum, kappa_frobenius, kappa_square_class,
                   s_v, s_v_datum, verify_kappa_identification)

__all__ = [
    "CycNumber", "FiniteField", "KAPPA_SQUARE_CLASS", "SUPPORTED_D", "primitive_modulus", "MultChar", "JacobiDatum", "JacobiEntry",
    "gauss_sum", "jacobi_sum", "s_v", "s_v_datum", "kappa_frobenius", "kappa_square_class",
    "verify_kappa_identification", "derivation_value", "delta_g_membership", "gauss_table",
]
