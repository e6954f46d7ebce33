"""Exact arithmetic for Calabi-Yau type differential operators.

Frobenius bases at a point of maximal unipotent monodromy, mirror maps,
Yukawa couplings and their Lambert (instanton) expansions, exterior squares
of fourth-order operators, Hadamard products and a handful of transforms
between operators, all over the rationals.
"""
from .diffop import (DOp, Recurrence, ThetaOperator, THETA, apply, dz_to_theta, equivalent,
                     find_operator, fit_operator, frobenius_basis, is_mum, local_exponents,
                     operator_from_recurrence, recurrence_from_operator, sequence_from_operator,
                     theta_to_dz, unroll)
from .mum import (LambertSeries, MirrorData, condition22, instanton_numbers, lambert_decompose,
                  mirror_map, rescale_coupling, yukawa, yukawa_via_a3)
from .poly import Poly, RatFunc
from .series import LogSeries, PowerSeries

__version__ = "0.1.0"

__all__ = [
    "DOp", "LambertSeries", "LogSeries", "MirrorData", "Poly", "PowerSeries", "RatFunc",
    "Recurrence", "THETA", "ThetaOperator", "apply", "condition22", "dz_to_theta", "equivalent",
    "find_operator", "fit_operator", "frobenius_basis", "instanton_numbers", "is_mum",
    "lambert_decompose", "local_exponents", "mirror_map", "operator_from_recurrence",
    "recurrence_from_operator", "rescale_coupling", "sequence_from_operator", "theta_to_dz",
    "unroll", "yukawa", "yukawa_via_a3",
]
