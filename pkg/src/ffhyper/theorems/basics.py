"""Verifiers for the character, Gauss-sum and Jacobi-sum facts everything else rests on."""
from __future__ import annotations

import itertools

from ..characters import MultChar, char_eval, characters
from ..cyclotomic import CycNum
from ..gauss import GaussTable, gauss_sum, jacobi_sum
from ..hypergeometric import Evaluator
from .common import Session
from .identities import _sum
from .plan import DEFAULT_PLAN, SweepPlan
from .report import TheoremReport


def verify_orthogonality(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """sum_x chi(x) is q-1 or 0 by triviality of chi; sum_chi chi(x) is q-1 or 0 by x = 1."""
    s = Session(q, "orthogonality")
    ctx, K = s.ctx, s.K
    elems = list(ctx.elements())
    chars = list(characters(ctx))
    for chi in chars:
        s.tally.branch("over-elements")
        total = _sum(K, (char_eval(chi, x) for x in elems))
        s.tally.compare((chi.index,), total, K.from_rational(s.N if chi.is_trivial else 0))
    for x in elems:
        s.tally.branch("over-characters")
        total = _sum(K, (char_eval(chi, x) for chi in chars))
        s.tally.compare((x.code,), total, K.from_rational(s.N if x.code == 1 else 0))
    return s.tally.finish()


def verify_gauss_conjugate(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """g(chi) g(chi-bar) = chi(-1) q for nontrivial chi, and 1 for the trivial character."""
    s = Session(q, "gauss-conj")
    ctx, K = s.ctx, s.K
    for chi in characters(ctx):
        prod = gauss_sum(chi) * gauss_sum(chi.conj())
        if chi.is_trivial:
            s.tally.branch("trivial")
            s.tally.compare((0,), prod, K.one)
        else:
            s.tally.branch("nontrivial")
            s.tally.compare((chi.index,), prod, char_eval(chi, ctx.minus_one) * s.q)
    return s.tally.finish()


def verify_jacobi_gauss(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """J(chi, psi) through Gauss sums: g g / g(chi psi), or -g g / q when chi psi is trivial."""
    s = Session(q, "jacobi-gauss")
    ctx, K = s.ctx, s.K
    for a, b in plan.tuples([range(s.N)] * 2, f"jacobi-gauss:{s.q}"):
        chi, psi = MultChar(ctx, a), MultChar(ctx, b)
        j = jacobi_sum(chi, psi)
        if a == 0 and b == 0:
            # outside the relation; with eps(0) = 0 the sum counts t != 0, 1
            s.tally.branch("both-trivial")
            s.tally.compare((a, b), j, K.from_rational(s.q - 2))
            continue
        gg = gauss_sum(chi) * gauss_sum(psi)
        if (chi * psi).is_trivial:
            s.tally.branch("inverse-pair")
            s.tally.compare((a, b), j, -gg / s.q)
        else:
            s.tally.branch("generic")
            s.tally.compare((a, b), j * gauss_sum(chi * psi), gg)
    return s.tally.finish()


def verify_jacobi_twist_sum(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """sum_chi J(A chi, B chi-bar) chi(-1) = 0 for all A, B."""
    s = Session(q, "sum-jacobi")
    ctx, K = s.ctx, s.K
    for a, b in plan.tuples([range(s.N)] * 2, f"sum-jacobi:{s.q}"):
        s.tally.branch("all")
        total = _sum(
            K,
            (jacobi_sum(MultChar(ctx, a + c), MultChar(ctx, b - c)) * s.sign(c) for c in range(s.N)),
        )
        s.tally.compare((a, b), total, K.zero)
    return s.tally.finish()


def verify_gauss_twist_sum(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """(1/(q-1)) sum_chi g(A chi) g(B chi-bar) chi(-1) is (q-1) A(-1) when AB is trivial, else 0."""
    s = Session(q, "sum-gauss")
    ctx, K = s.ctx, s.K
    for a, b in plan.tuples([range(s.N)] * 2, f"sum-gauss:{s.q}"):
        total = _sum(
            K,
            (
                gauss_sum(MultChar(ctx, a + c)) * gauss_sum(MultChar(ctx, b - c)) * s.sign(c)
                for c in range(s.N)
            ),
        ) / s.N
        if (a + b) % s.N:
            s.tally.branch("product-nontrivial")
            s.tally.compare((a, b), total, K.zero)
        else:
            s.tally.branch("product-trivial")
            s.tally.compare((a, b), total, K.from_rational(s.N * s.sign(a)))
    return s.tally.finish()


def verify_gauss_inverse(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """Closed-form 1/g(chi) against inversion in the cyclotomic field."""
    s = Session(q, "gauss-inv")
    gt = s.gt
    for j in range(s.N):
        s.tally.branch("trivial" if j == 0 else "nontrivial")
        generic = CycNum(s.K, gt.raw(j), 1).inverse()
        s.tally.compare((j,), gt.inv(j), generic)
    return s.tally.finish()


def _star_spaces(s: Session, plan: SweepPlan, tag: str, orders) -> list[tuple[int, tuple]]:
    out = []
    for n in orders:
        for t in plan.tuples([range(s.N)] * (2 * n + 1), f"{tag}:{s.q}:{n}"):
            out.append((n, t))
    return out


def verify_additive_independence(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """The star function is unchanged when theta(x) is replaced by theta(c x), for every c != 0."""
    s = Session(q, "additive-char")
    ctx, ev = s.ctx, s.ev
    params = _star_spaces(s, plan, "additive-char", (0, 1, 2))
    for c in range(2, s.q):
        other = Evaluator(ctx, GaussTable(ctx, c))
        for n, t in params:
            s.tally.branch(f"n={n}")
            top, bottom = t[: n + 1], t[n + 1 :]
            for x in range(1, s.q):
                s.tally.compare(
                    t + (c, x), other.star(top, bottom, x), ev.star(top, bottom, x), f"scale=code {c}"
                )
    return s.tally.finish()


def verify_permutation_invariance(q, plan: SweepPlan = DEFAULT_PLAN) -> TheoremReport:
    """The star function is symmetric in its top parameters and, separately, its bottom ones."""
    s = Session(q, "permutation")
    ev = s.ev
    for n, t in _star_spaces(s, plan, "permutation", (1, 2)):
        s.tally.branch(f"n={n}")
        top, bottom = t[: n + 1], t[n + 1 :]
        base = {x: ev.star(top, bottom, x) for x in range(1, s.q)}
        for pt in itertools.permutations(top):
            for pb in itertools.permutations(bottom):
                if pt == top and pb == bottom:
                    continue
                for x in range(1, s.q):
                    s.tally.compare(t + (x,), ev.star(pt, pb, x), base[x], f"perm {pt}|{pb}")
    return s.tally.finish()
