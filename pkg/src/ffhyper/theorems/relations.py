"""Verifiers relating the star function to Greene's and Katz's functions."""
from __future__ import annotations

from ..hypergeometric import relate_star_greene_idx
from .common import Session
from .identities import _sum
from .plan import DEFAULT_PLAN, SweepPlan
from .report import TheoremReport


def _split(t: tuple, n: int) -> tuple[tuple, tuple]:
    return t[: n + 1], t[n + 1 :]


def verify_star_greene(q, plan: SweepPlan = DEFAULT_PLAN, n_max: int = 2) -> TheoremReport:
    """Star function against rescaled Greene function, generic and one-coincidence cases.

    Parameter patterns the relation says nothing about are tallied as ``uncovered``.
    """
    s = Session(q, "star-greene")
    N, ev = s.N, s.ev
    points = [0] + s.sample_points(plan.seed, "relation-x")
    for n in range(n_max + 1):
        for t in plan.tuples([range(N)] * (2 * n + 1), f"star-greene:{s.q}:{n}"):
            top, bottom = _split(t, n)
            case = None
            for x in points:
                rel = relate_star_greene_idx(ev, top, bottom, x)
                if rel.status == "uncovered":
                    break
                case = rel.case
                s.tally.compare(t + (x,), rel.lhs, rel.rhs, f"{rel.case} x=code {x}")
            s.tally.branch(f"n={n}:{case or 'uncovered'}")
    return s.tally.finish()


def verify_star_katz(q, plan: SweepPlan = DEFAULT_PLAN, n_max: int = 2) -> TheoremReport:
    """Star function at x against Katz's sum at 1/x with a trivial character prepended below."""
    s = Session(q, "star-katz")
    N, gt, ev, ctx = s.N, s.gt, s.ev, s.ctx
    for n in range(n_max + 1):
        for t in plan.tuples([range(N)] * (2 * n + 1), f"star-katz:{s.q}:{n}"):
            top, bottom = _split(t, n)
            s.tally.branch(f"n={n}")
            sign = 1
            for b in bottom:
                sign *= s.sign(b)
            coef = gt.quot([], list(top) + [-b for b in bottom]) * sign
            for x in range(1, s.q):
                rhs = coef * ev.katz(top, (0,) + bottom, ctx.inv_code(x))
                s.tally.compare(t + (x,), ev.star(top, bottom, x), rhs, f"x=code {x}")
    return s.tally.finish()


def verify_greene_gauss(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """Rescaled Greene 2F1(A, B; C | 1) = g(A C-bar) g(B C-bar) / (g(C-bar) g(A B C-bar))."""
    s = Session(q, "greene-gauss")
    N, gt, ev = s.N, s.gt, s.ev
    for a, b, c in plan.tuples([range(N)] * 3, f"greene-gauss:{s.q}"):
        if a == 0 or b == c or (a + b - c) % N == 0:
            s.tally.branch("excluded")
            continue
        s.tally.branch("admissible")
        lhs = ev.binom_inv(b, c) * ev.greene((a, b), (c,), 1)
        s.tally.compare((a, b, c), lhs, gt.quot([a - c, b - c], [-c, a + b - c]))
    return s.tally.finish()


def verify_greene_437(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """Rescaled Greene 3F2(C, B, A; A C-bar, A B-bar | 1): zero off squares, a root sum on them.

    Odd q only: in characteristic 2 the root-sum value is wrong for every admissible tuple.
    """
    s = Session(q, "greene-437", odd_only=True)
    N, gt, ev, K = s.N, s.gt, s.ev, s.K
    for a, b, c in plan.tuples([range(N)] * 3, f"greene-437:{s.q}"):
        if not (a and b and c) or (b + c - a) % N == 0 or (2 * (b + c) - a) % N == 0:
            s.tally.branch("excluded")
            continue
        lhs = ev.binom_inv(b, a - c) * ev.binom_inv(a, a - b) * ev.greene((c, b, a), (a - c, a - b), 1)
        if not s.is_square(a):
            s.tally.branch("nonsquare")
            s.tally.compare((a, b, c), lhs, K.zero)
            continue
        s.tally.branch("root-sum")
        rhs = _sum(
            K,
            (gt.quot([-a, b - r, c - r, b + c - a], [-r, b - a, c - a, b + c - r]) for r in s.roots(a)),
        )
        s.tally.compare((a, b, c), lhs, rhs)
    return s.tally.finish()


def verify_katz_vsum(q, plan: SweepPlan = DEFAULT_PLAN, max_params: int = 4) -> TheoremReport:
    """Katz's sum from its Fourier-inverted form against direct enumeration of the V-set."""
    s = Session(q, "katz-vsum")
    N, ev = s.N, s.ev
    for total in range(2, max_params + 1):
        for n in range(1, total):
            m = total - n
            for t in plan.tuples([range(N)] * total, f"katz-vsum:{s.q}:{n}:{m}"):
                top, bottom = t[:n], t[n:]
                s.tally.branch(f"{n}F{m}")
                for x in range(1, s.q):
                    s.tally.compare(
                        t + (x,), ev.katz(top, bottom, x), ev.katz_vsum(top, bottom, x), f"t=code {x}"
                    )
    return s.tally.finish()
