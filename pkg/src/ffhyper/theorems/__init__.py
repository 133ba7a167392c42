"""Exact verification of the identities satisfied by finite-field hypergeometric functions."""
from .basics import (
    verify_additive_independence,
    verify_gauss_conjugate,
    verify_gauss_inverse,
    verify_gauss_twist_sum,
    verify_jacobi_gauss,
    verify_jacobi_twist_sum,
    verify_orthogonality,
    verify_permutation_invariance,
)
from .identities import (
    verify_dixon,
    verify_gauss_analogue,
    verify_hp,
    verify_katz_recursion,
    verify_kummer,
    verify_recursion,
    verify_remark_4f3,
    verify_vanishing,
    verify_whipple_4f3,
    verify_whipple_5f4,
)
from .plan import DEFAULT_PLAN, SweepPlan
from .registry import IDENTITIES, INVARIANTS, REGISTRY, run_suite, run_theorem, theorem_ids
from .relations import (
    verify_greene_437,
    verify_greene_gauss,
    verify_katz_vsum,
    verify_star_greene,
    verify_star_katz,
)
from .report import Failure, TheoremReport, reports_to_json

__all__ = [name for name in dir() if name.startswith(("verify_", "run_"))] + [
    "DEFAULT_PLAN",
    "SweepPlan",
    "IDENTITIES",
    "INVARIANTS",
    "REGISTRY",
    "theorem_ids",
    "Failure",
    "TheoremReport",
    "reports_to_json",
]
