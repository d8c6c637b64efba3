"""Solvers and convergence harness for sub-diffusion equations
with time-singular sources."""

from .harness import (ConvergenceReport, StudyRow, fode_study, pde_study,
                      reproduce_table, run_self_checks, spatial_study)
from .ml import ml_conv_weight, ml_conv_weight_array, ml_eval, ml_eval_array
from .oracle import fode_exact, regularity_slope, semidiscrete_exact
from .sources import PowerOde, SourceSpec, profile_mean, resolve_profile
from .spatial import MeshSpec, SpatialOperator, build_operator
from .steppers import SCHEMES, run_fode, run_pde_modal, run_pde_nodal, run_scheme
from .weights import apply_cq, check_sector_lemmas, fbdf2_weights, gl_weights

__version__ = "0.1.0"

__all__ = [
    "ConvergenceReport", "MeshSpec", "PowerOde", "SCHEMES", "SourceSpec",
    "SpatialOperator", "StudyRow", "apply_cq", "build_operator",
    "check_sector_lemmas", "fbdf2_weights", "fode_exact", "fode_study",
    "gl_weights", "ml_conv_weight", "ml_conv_weight_array", "ml_eval",
    "ml_eval_array", "pde_study", "profile_mean", "regularity_slope",
    "reproduce_table", "resolve_profile", "run_fode", "run_pde_modal",
    "run_pde_nodal", "run_scheme", "run_self_checks", "semidiscrete_exact",
    "spatial_study",
]
