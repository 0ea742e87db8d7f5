"""Exact symbolic engine for noncommutative-residue boundary terms.

Computes and verifies the boundary contribution to the residue of
pi+ D^{-p1} o pi+ D^{-p2} for Dirac operator powers on manifolds with
boundary: exact rational-function calculus at the poles +-i, a reduced
Clifford algebra with the spinor trace, the boundary symbol catalog,
case-by-case evaluation of the defining sum, and an independent numeric
oracle (gamma matrices, quadrature, sphere sampling, finite differences).
"""

from .boundary import (
    CaseIndex,
    CaseValue,
    ExactValue,
    PhiReport,
    compute_case,
    compute_phi,
    enumerate_cases,
    interior_constant,
    l0_closed_form,
    theorem_report,
)
from .clifford import CliffordElem, TraceConvention, verify_trace_table
from .exprio import parse_rationalfn, print_rationalfn
from .rational import CoeffPoly, GaussianRational, PiMultiple, RationalFn
from .symbols import SymbolJet, UnsupportedConfigurationError, build_catalog

__version__ = "0.1.0"

__all__ = [
    "CaseIndex", "CaseValue", "CliffordElem", "CoeffPoly", "ExactValue",
    "GaussianRational", "PhiReport", "PiMultiple", "RationalFn", "SymbolJet",
    "TraceConvention", "UnsupportedConfigurationError", "build_catalog",
    "compute_case", "compute_phi", "enumerate_cases", "interior_constant",
    "l0_closed_form", "parse_rationalfn", "print_rationalfn", "theorem_report",
    "verify_trace_table", "__version__",
]
