"""Symbolic workbench for single-vertex rank-2 graph algebras O_theta."""

from .algebra import (E_fixed, Element, GenPair, Phi, adjoint, equals, gauge, gen, identity, level,
                      mul, omega, s, s_star, sigma_imag, sigma_real, simplify, tau, zero)
from .classifier import FactorTypeReport, classify, connes_T, modular_eigenvalue, spectrum_grid
from .expr import format_element, parse_element
from .fixed_point import FlipUnitary, Psi, build_U, decompose, in_fixed_algebra, rho
from .graph import (EMPTY, Degree, ThetaSpec, Word, concat, enumerate_words, factor, normalize,
                    theta_family, word)
from .kms import beta_scan, id_vanishing_check, kms_check, kms_suite, tensor_split_check
from .matrix_rep import embed_check, oracle_mul_check, rep
from .periodicity import PeriodReport, check_period, derive_gamma, find_period, mult_dependent

__all__ = [
    "E_fixed", "Element", "GenPair", "Phi", "adjoint", "equals", "gauge", "gen", "identity", "level",
    "mul", "omega", "s", "s_star", "sigma_imag", "sigma_real", "simplify", "tau", "zero",
    "FactorTypeReport", "classify", "connes_T", "modular_eigenvalue", "spectrum_grid",
    "format_element", "parse_element",
    "FlipUnitary", "Psi", "build_U", "decompose", "in_fixed_algebra", "rho",
    "EMPTY", "Degree", "ThetaSpec", "Word", "concat", "enumerate_words", "factor", "normalize",
    "theta_family", "word",
    "beta_scan", "id_vanishing_check", "kms_check", "kms_suite", "tensor_split_check",
    "embed_check", "oracle_mul_check", "rep",
    "PeriodReport", "check_period", "derive_gamma", "find_period", "mult_dependent",
]

__version__ = "0.1.0"
