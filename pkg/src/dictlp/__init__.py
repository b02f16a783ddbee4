"""Exact rational LP dictionaries, primal/dual simplex, and duality checks.

Everything computes over arbitrary-precision rationals; there is no floating
point anywhere, so every comparison and every certificate is exact.
"""

from dictlp._kernels import BACKEND
from dictlp.exact import QMatrix, QVector, rational, rank, rref, rowspace_contains, rowspace_equal, solve_linear
from dictlp.model import (
    AugmentedLP,
    DualIndexMap,
    ParseError,
    StandardLP,
    augment,
    dual_lp,
    parse_lp,
    serialize_lp,
)
from dictlp.dictionary import (
    Dictionary,
    NotABasisError,
    PivotError,
    basic_solution,
    canonical,
    dictionary_from_basis,
    initial_dictionary,
    is_dual_feasible,
    is_primal_feasible,
    negative_transpose,
    pivot,
)
from dictlp.simplex import (
    Infeasible,
    Optimal,
    PivotRule,
    SolveOutcome,
    Terminal,
    Unbounded,
    choose_entering,
    choose_leaving,
    dual_simplex,
    primal_simplex,
    solve,
)
from dictlp.duality import (
    BasisCountError,
    BijectionReport,
    RMatrix,
    build_R,
    dictionary_matrix,
    dual_dictionary_direct,
    enumerate_bases,
    in_kernel,
    in_rowspace,
    verify_bijection,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AugmentedLP",
    "BasisCountError",
    "BijectionReport",
    "Dictionary",
    "DualIndexMap",
    "Infeasible",
    "NotABasisError",
    "Optimal",
    "ParseError",
    "PivotError",
    "PivotRule",
    "QMatrix",
    "QVector",
    "RMatrix",
    "SolveOutcome",
    "StandardLP",
    "Terminal",
    "Unbounded",
    "augment",
    "basic_solution",
    "build_R",
    "canonical",
    "choose_entering",
    "choose_leaving",
    "dictionary_from_basis",
    "dictionary_matrix",
    "dual_dictionary_direct",
    "dual_lp",
    "dual_simplex",
    "enumerate_bases",
    "in_kernel",
    "in_rowspace",
    "initial_dictionary",
    "is_dual_feasible",
    "is_primal_feasible",
    "negative_transpose",
    "parse_lp",
    "pivot",
    "primal_simplex",
    "rank",
    "rational",
    "rowspace_contains",
    "rowspace_equal",
    "rref",
    "serialize_lp",
    "solve",
    "solve_linear",
    "verify_bijection",
]
