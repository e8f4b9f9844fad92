"""Kernels and invertibility of Toeplitz operators with polyanalytic symbols on the Bergman space."""

from .criteria import (
    AnalysisReport, Claim, Verdict, analyze, corollary_example, corollary_symbol,
    first_order_criterion, spectrum_probe, multiple_zero_indicial,
)
from .errors import (
    ConvergenceAmbiguous, InternalInconsistency, NotRegular, OrderTooSmall, ParseError,
    PolyToeplitzError, ResonanceObstruction, ValidationError, WindingDisagreement, WZeroExcluded,
)
from .frobenius import IndicialData, classify, indicial, series_solution
from .oracle import ProbeThresholds, apply_toeplitz_poly, kernel_probe, quadrature_check, truncate
from .scalarpoly import GaussQ, Poly, laurent, locate_zeros, roots
from .symbolkit import PolyanalyticSymbol, index_data, parse_symbol, tilde
from .weylops import DiffOp, build_dphi, build_lambda

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "Claim", "ConvergenceAmbiguous", "DiffOp", "GaussQ", "IndicialData",
    "InternalInconsistency", "NotRegular", "OrderTooSmall", "ParseError", "Poly",
    "PolyToeplitzError", "PolyanalyticSymbol", "ProbeThresholds", "ResonanceObstruction",
    "ValidationError", "Verdict", "WZeroExcluded", "WindingDisagreement", "analyze",
    "apply_toeplitz_poly", "build_dphi", "build_lambda", "classify", "corollary_example",
    "corollary_symbol", "first_order_criterion", "index_data", "indicial", "kernel_probe",
    "laurent", "locate_zeros", "parse_symbol", "quadrature_check", "roots", "series_solution",
    "spectrum_probe", "multiple_zero_indicial", "tilde", "truncate",
]
