"""Signature-based Groebner bases over GF(p) with instrumented s-reduction strategies."""

from .counters import Counters
from .engine import EngineConfig, RunResult, incremental_sig_gb
from .ffield import DEFAULT_MODULUS, Field
from .poly import Poly, Ring
from .postproc import buchberger, gb_check, reduced_basis, same_basis
from .reduce import FULL, ONLY_TOP, SELECTIVE_FULL, STRATEGIES

__version__ = "0.1.0"

__all__ = [
    "Counters", "DEFAULT_MODULUS", "EngineConfig", "FULL", "Field", "ONLY_TOP",
    "Poly", "Ring", "RunResult", "SELECTIVE_FULL", "STRATEGIES", "buchberger",
    "gb_check", "incremental_sig_gb", "reduced_basis", "same_basis",
]
