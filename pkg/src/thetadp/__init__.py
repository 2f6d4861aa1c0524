"""Exact DP color functions of generalized theta graphs."""

from thetadp.arith import PairCount, ceil_mth_root, pair_counts
from thetadp.closed_forms import (
    Case,
    FormulaResult,
    amgm_bound,
    chromatic_poly_cycle,
    chromatic_poly_theta,
    dp_theta3,
    dual_dp_generalized,
    sufficiency_check,
)
from thetadp.kernels import BACKEND
from thetadp.optimizer import SearchOptions, SearchResult, adherence_scan, maximize, minimize
from thetadp.signatures import Signature, evaluate_signature, parse_signature
from thetadp.theta import ThetaSpec, canonicalize, parse_spec, vertex_layout

__version__ = "0.1.0"
