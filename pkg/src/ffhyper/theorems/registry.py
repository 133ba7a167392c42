"""Registered verifiers and the suite runner."""
from __future__ import annotations

from typing import Callable, Iterable, Optional

from ..errors import EvenCharacteristic, UnknownTheorem
from ..finite_field import FieldCtx, field_of_order
from . import basics, identities, relations
from .plan import DEFAULT_PLAN, SweepPlan
from .report import TheoremReport, skipped_report

# the identities of the source text, in suite order
IDENTITIES: dict[str, Callable[..., TheoremReport]] = {
    "hp": identities.verify_hp,
    "gauss": identities.verify_gauss_analogue,
    "kummer": identities.verify_kummer,
    "dixon": identities.verify_dixon,
    "whipple4": identities.verify_whipple_4f3,
    "remark": identities.verify_remark_4f3,
    "whipple5": identities.verify_whipple_5f4,
    "recursion": identities.verify_recursion,
    "katz-recursion": identities.verify_katz_recursion,
    "vanishing": identities.verify_vanishing,
    "greene-gauss": relations.verify_greene_gauss,
    "greene-437": relations.verify_greene_437,
    "star-greene": relations.verify_star_greene,
    "star-katz": relations.verify_star_katz,
}

# supporting facts and the direct Katz oracle
INVARIANTS: dict[str, Callable[..., TheoremReport]] = {
    "katz-vsum": relations.verify_katz_vsum,
    "orthogonality": basics.verify_orthogonality,
    "gauss-conj": basics.verify_gauss_conjugate,
    "jacobi-gauss": basics.verify_jacobi_gauss,
    "sum-jacobi": basics.verify_jacobi_twist_sum,
    "sum-gauss": basics.verify_gauss_twist_sum,
    "gauss-inv": basics.verify_gauss_inverse,
    "additive-char": basics.verify_additive_independence,
    "permutation": basics.verify_permutation_invariance,
}

REGISTRY: dict[str, Callable[..., TheoremReport]] = {**IDENTITIES, **INVARIANTS}

# verifiers that accept an order bound
_ORDER_BOUND = {"recursion", "katz-recursion", "vanishing"}


def theorem_ids() -> list[str]:
    return list(REGISTRY)


def run_theorem(
    theorem_id: str, q, plan: SweepPlan = DEFAULT_PLAN, n_max: Optional[int] = None
) -> TheoremReport:
    """Run one verifier, turning an even-characteristic refusal into a skipped report."""
    fn = REGISTRY.get(theorem_id)
    if fn is None:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}; known: {', '.join(REGISTRY)}")
    kwargs = {"plan": plan}
    if n_max is not None and theorem_id in _ORDER_BOUND:
        kwargs["n_max"] = n_max
    try:
        return fn(q, **kwargs)
    except EvenCharacteristic as exc:
        ctx = q if isinstance(q, FieldCtx) else field_of_order(q)
        return skipped_report(theorem_id, ctx.q, f"EvenCharacteristic: {exc}", ctx.describe())


def run_suite(
    q_list: Iterable[int],
    plan: SweepPlan = DEFAULT_PLAN,
    theorems: Optional[Iterable[str]] = None,
    n_max: Optional[int] = None,
) -> list[TheoremReport]:
    """Every requested verifier over every q, ordered by q and then by registry order."""
    ids = list(theorems) if theorems is not None else theorem_ids()
    for tid in ids:
        if tid not in REGISTRY:
            raise UnknownTheorem(f"unknown theorem id {tid!r}")
    return [run_theorem(tid, q, plan, n_max) for q in q_list for tid in ids]
