"""Exact edgepath computations behind crosscap numbers of pretzel knots."""
from .analysis import (
    BoundReport,
    CrosscapReport,
    check_knot_monotonicity,
    crosscap_report,
    exceeds,
    lambda_a_function,
    tuple_equiv,
    tuple_le,
    verify_bound,
)
from .candidates import (
    CandidateFamily,
    EdgepathSystem,
    SystemType,
    chi_ratio,
    enumerate_type_ii,
    enumerate_type_iii,
    solve_type_i,
    stats,
)
from .core import PiecewiseLinear, pl_eval, pl_inf_over_open_ray, pl_roots, pl_sum
from .edgepath import BasicEdgepath, Edgepath, big_x, cut_at, gluing_sum, x_of
from .knot import InvalidKnotError, PretzelKnot, crosscap_number, parse_pretzel, reference_stats

__version__ = "0.1.0"

__all__ = [
    "BasicEdgepath",
    "BoundReport",
    "CandidateFamily",
    "CrosscapReport",
    "Edgepath",
    "EdgepathSystem",
    "InvalidKnotError",
    "PiecewiseLinear",
    "PretzelKnot",
    "SystemType",
    "big_x",
    "check_knot_monotonicity",
    "chi_ratio",
    "crosscap_number",
    "crosscap_report",
    "cut_at",
    "enumerate_type_ii",
    "enumerate_type_iii",
    "exceeds",
    "gluing_sum",
    "lambda_a_function",
    "parse_pretzel",
    "pl_eval",
    "pl_inf_over_open_ray",
    "pl_roots",
    "pl_sum",
    "reference_stats",
    "solve_type_i",
    "stats",
    "tuple_equiv",
    "tuple_le",
    "verify_bound",
    "x_of",
]
