"""Explicit-formula numerics for low-lying zeros of Dirichlet L-functions."""

from .errors import CapacityError, DataError, DomainError, LowZerosError, PrecisionError
from .testfuncs import (FAlpha, GAlpha, GBetaMinorant, JBeta, Kernel, LTheta, Triangle,
                        TestFunction, evaluate, fourier, sigma_weight, sign_threshold)
from .archimedean import i_arch
from .primes import PrimeTable, build_table, chebyshev_psi, weighted_sum
from .characters import Character, CharacterTable, Kronecker, build_characters
from .zerofinder import ZeroList, find_zeros, gamma_stats
from .explicit_formula import balance, weil_rhs, zero_side, zero_tail_bound

__all__ = [
    "CapacityError", "DataError", "DomainError", "LowZerosError", "PrecisionError",
    "FAlpha", "GAlpha", "GBetaMinorant", "JBeta", "Kernel", "LTheta", "Triangle",
    "TestFunction", "evaluate", "fourier", "sigma_weight", "sign_threshold",
    "i_arch", "PrimeTable", "build_table", "chebyshev_psi", "weighted_sum",
    "Character", "CharacterTable", "Kronecker", "build_characters",
    "ZeroList", "find_zeros", "gamma_stats",
    "balance", "weil_rhs", "zero_side", "zero_tail_bound",
]
