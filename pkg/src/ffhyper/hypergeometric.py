"""Hypergeometric functions over F_q: the normalised star function, Greene's
function and Katz's hypergeometric sum, plus the relations between them.

All three are evaluated from their character-sum forms using cached Gauss and
Jacobi sums.  Internally characters are plain indices mod ``q - 1`` and field
elements are codes; :class:`HypSpec` is the user-facing wrapper.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .characters import MultChar, minus_one_sign
from .cyclotomic import CycNum
from .errors import ZeroArgument
from .finite_field import FieldCtx, FqElem
from .gauss import GaussTable, gauss_table, jacobi_table

VARIANTS = ("star", "greene", "katz")
_CACHE_LIMIT = 40_000


@dataclass(frozen=True)
class HypSpec:
    variant: str
    top: tuple[MultChar, ...]
    bottom: tuple[MultChar, ...]
    arg: FqElem

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant != "katz" and len(self.top) != len(self.bottom) + 1:
            raise ValueError("need exactly one more top parameter than bottom parameters")
        if not self.top:
            raise ValueError("at least one top parameter is required")
        ctx = self.arg.ctx
        if any(c.ctx is not ctx for c in self.top + self.bottom):
            raise ValueError("parameters and argument must share a field")

    @property
    def ctx(self) -> FieldCtx:
        return self.arg.ctx

    @property
    def order(self) -> int:
        """n in n+1 F n."""
        return len(self.bottom)

    def well_poised(self) -> bool:
        ctx = self.ctx
        if self.arg.code not in (1, ctx.neg_code(1)):
            return False
        a0 = self.top[0]
        return all(b == a0 / a for a, b in zip(self.top[1:], self.bottom))


def well_poised_bottom(top: Sequence[int], N: int) -> tuple[int, ...]:
    """Bottom indices A_0 / A_j making ``top`` well-poised."""
    return tuple((top[0] - a) % N for a in top[1:])


class Evaluator:
    """Evaluates every variant over one field against one Gauss table.

    Results for a fixed parameter list are memoised as their per-character
    products, so re-evaluating at a different argument costs one twisted sum.
    """

    def __init__(self, ctx: FieldCtx, gauss: GaussTable | None = None):
        self.ctx = ctx
        self.gauss = gauss or gauss_table(ctx)
        self.jacobi = jacobi_table(ctx)
        self.K = self.gauss.field
        self.N = ctx.order
        self._step = ctx.conductor // ctx.order
        self._terms: dict = {}
        self._binv: dict = {}

    # -- per-character products ----------------------------------------------------
    def _remember(self, key, value):
        if len(self._terms) >= _CACHE_LIMIT:
            self._terms.clear()
        self._terms[key] = value
        return value

    def _product(self, factors: list[np.ndarray]) -> np.ndarray:
        K = self.K
        if not factors:
            return K.one_raw
        acc = factors[0]
        for f in factors[1:]:
            acc = K.mul_raw(acc, f)
        return acc

    def _pairs(self, idx: list[int]) -> list[np.ndarray]:
        gt = self.gauss
        out = [gt.pair_raw(idx[i], idx[i + 1]) for i in range(0, len(idx) - 1, 2)]
        if len(idx) % 2:
            out.append(gt.raw(idx[-1]))
        return out

    def star_terms(self, top: tuple[int, ...], bottom: tuple[int, ...]):
        key = ("star", top, bottom)
        hit = self._terms.get(key)
        if hit is not None:
            return hit
        N = self.N
        rows = []
        for c in range(N):
            idx = [a + c for a in top] + [-(b + c) for b in bottom] + [-c]
            rows.append(self._product(self._pairs(idx)))
        const = self.gauss.quot([], list(top) + [-b for b in bottom]) * CycNum._make(
            self.K, self.K.one_raw, N
        )
        return self._remember(key, (const, rows))

    def katz_terms(self, top: tuple[int, ...], bottom: tuple[int, ...]):
        key = ("katz", top, bottom)
        hit = self._terms.get(key)
        if hit is not None:
            return hit
        N, ctx = self.N, self.ctx
        rows = []
        for c in range(N):
            idx = [a + c for a in top] + [-(b + c) for b in bottom]
            sign = 1
            for b in bottom:
                sign *= minus_one_sign(ctx, b + c)
            rows.append(self._product(self._pairs(idx)) * sign)
        const = CycNum._make(self.K, self.K.one_raw, N)
        return self._remember(key, (const, rows))

    def greene_terms(self, top: tuple[int, ...], bottom: tuple[int, ...]):
        key = ("greene", top, bottom)
        hit = self._terms.get(key)
        if hit is not None:
            return hit
        N, ctx, J = self.N, self.ctx, self.jacobi
        rows = []
        for c in range(N):
            # binom(A, B) = B(-1)/q * J(A, B-bar)
            pairs = [(top[0] + c, c)] + [(a + c, b + c) for a, b in zip(top[1:], bottom)]
            sign = 1
            factors = []
            for a, b in pairs:
                sign *= minus_one_sign(ctx, b)
                factors.append(J.raw(a, -b))
            rows.append(self._product(factors) * sign)
        const = CycNum._make(self.K, self.K.one_raw * ctx.q, N * ctx.q ** len(top))
        return self._remember(key, (const, rows))

    def _twist(self, const: CycNum, rows, s: int) -> CycNum:
        exps = [self._step * c * s for c in range(self.N)]
        return const * CycNum._make(self.K, self.K.twisted_sum(rows, exps), 1)

    # -- evaluations ----------------------------------------------------------------
    def star(self, top: Sequence[int], bottom: Sequence[int], x: int) -> CycNum:
        """n+1 F n (top; bottom | x)^star with x given as a field code."""
        N = self.N
        top = tuple(a % N for a in top)
        bottom = tuple(b % N for b in bottom)
        if len(top) != len(bottom) + 1:
            raise ValueError("need exactly one more top parameter than bottom parameters")
        if x == 0:
            return self.K.zero
        const, rows = self.star_terms(top, bottom)
        s = (len(top) * self.ctx.minus_one_log + self.ctx.log_code(x)) % N
        return self._twist(const, rows, s)

    def greene(self, top: Sequence[int], bottom: Sequence[int], x: int) -> CycNum:
        N = self.N
        top = tuple(a % N for a in top)
        bottom = tuple(b % N for b in bottom)
        if len(top) != len(bottom) + 1:
            raise ValueError("need exactly one more top parameter than bottom parameters")
        if x == 0:
            return self.K.zero
        const, rows = self.greene_terms(top, bottom)
        return self._twist(const, rows, self.ctx.log_code(x))

    def katz(self, top: Sequence[int], bottom: Sequence[int], t: int) -> CycNum:
        """Katz's sum in its Fourier-inverted character-sum form; t is a field code."""
        if t == 0:
            raise ZeroArgument("Katz's hypergeometric sum needs t != 0")
        N = self.N
        top = tuple(a % N for a in top)
        bottom = tuple(b % N for b in bottom)
        const, rows = self.katz_terms(top, bottom)
        return self._twist(const, rows, -self.ctx.log_code(t))

    def binom(self, a: int, b: int) -> CycNum:
        """Greene's binomial coefficient (A over B)."""
        sign = minus_one_sign(self.ctx, b)
        return CycNum._make(self.K, self.jacobi.raw(a, -b) * sign, self.ctx.q)

    def binom_inv(self, a: int, b: int) -> CycNum:
        N = self.N
        key = (a % N, b % N)
        v = self._binv.get(key)
        if v is None:
            a, b = key
            if a and b and a != b:
                # J(A, B-bar) J(A-bar, B) = q when A, B-bar and A B-bar are all nontrivial
                v = CycNum(self.K, self.jacobi.raw(-a, b) * minus_one_sign(self.ctx, b), 1)
            else:
                v = self.binom(a, b).inverse()  # a rational value here
            self._binv[key] = v
        return v

    def _vset(self, n: int, m: int, lt: int) -> np.ndarray:
        """Exponent rows (x_1..x_n, y_1..y_m) with prod x = g^lt prod y."""
        key = ("vset", n, m, lt)
        hit = self._terms.get(key)
        if hit is None:
            N = self.N
            free = n + m - 1
            grid = np.indices((N,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
            xs, ys = grid[:, : n - 1], grid[:, n - 1 :]
            last = (lt + ys.sum(axis=1) - xs.sum(axis=1)) % N
            hit = self._remember(key, np.column_stack([xs, last, ys]).astype(np.int64))
        return hit

    def katz_vsum(self, top: Sequence[int], bottom: Sequence[int], t: int) -> CycNum:
        """Katz's sum by enumerating x_1..x_n = t y_1..y_m directly.

        theta is additive, so theta(sum x_i - sum y_j) splits into one factor per
        coordinate and the whole set is handled as an exponent array.
        """
        if t == 0:
            raise ZeroArgument("Katz's hypergeometric sum needs t != 0")
        if not top:
            raise ValueError("the direct sum needs at least one top parameter")
        ctx, N = self.ctx, self.N
        n = ctx.conductor
        rows = self._vset(len(top), len(bottom), ctx.log_code(t))
        xs, ys = rows[:, : len(top)], rows[:, len(top) :]
        add = self.gauss._add_exps
        e = add[xs].sum(axis=1) + add[(ys + ctx.minus_one_log) % N].sum(axis=1)
        e = e + self._step * (xs @ np.array(top, dtype=np.int64) - ys @ np.array(bottom, dtype=np.int64))
        counts = np.bincount(e % n, minlength=n).astype(np.int64)
        return CycNum._make(self.K, self.K.reduce_cyclic(counts), 1)


@lru_cache(maxsize=None)
def evaluator(ctx: FieldCtx) -> Evaluator:
    return Evaluator(ctx)


def _indices(chars: Sequence[MultChar]) -> tuple[int, ...]:
    return tuple(c.index for c in chars)


def f_star(spec: HypSpec) -> CycNum:
    if spec.variant != "star":
        raise ValueError("f_star needs a star-variant spec")
    return evaluator(spec.ctx).star(_indices(spec.top), _indices(spec.bottom), spec.arg.code)


def f_greene(spec: HypSpec) -> CycNum:
    if spec.variant != "greene":
        raise ValueError("f_greene needs a greene-variant spec")
    return evaluator(spec.ctx).greene(_indices(spec.top), _indices(spec.bottom), spec.arg.code)


def f_katz(spec: HypSpec) -> CycNum:
    if spec.variant != "katz":
        raise ValueError("f_katz needs a katz-variant spec")
    return evaluator(spec.ctx).katz(_indices(spec.top), _indices(spec.bottom), spec.arg.code)


def evaluate(spec: HypSpec) -> CycNum:
    return {"star": f_star, "greene": f_greene, "katz": f_katz}[spec.variant](spec)


def greene_binom(A: MultChar, B: MultChar) -> CycNum:
    return evaluator(A.ctx).binom(A.index, B.index)


@dataclass
class Relation:
    """Outcome of comparing the star function with a rescaled Greene function."""

    status: str  # "match", "mismatch" or "uncovered"
    case: Optional[str] = None  # "generic" or "exceptional"
    lhs: Optional[CycNum] = field(default=None, repr=False)
    rhs: Optional[CycNum] = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.status != "mismatch"


def relate_star_greene_idx(ev: Evaluator, top: Sequence[int], bottom: Sequence[int], x: int) -> Relation:
    N = ev.N
    top = tuple(a % N for a in top)
    bottom = tuple(b % N for b in bottom)
    n = len(bottom)
    if top[0] == 0:
        return Relation("uncovered")
    unequal = [top[i + 1] != bottom[i] for i in range(n)]
    if all(unequal):
        case = "generic"
    elif n >= 1 and all(unequal[:-1]) and top[n] == bottom[n - 1] != 0:
        case = "exceptional"
    else:
        return Relation("uncovered")
    lhs = ev.star(top, bottom, x)
    scale = ev.K.one
    for a, b in zip(top[1:], bottom):
        scale = scale * ev.binom_inv(a, b)
    rhs = scale * ev.greene(top, bottom, x)
    if case == "exceptional" and x != 0:
        an = top[n]
        extra = ev.binom(top[0] - an, -an) * (ev.ctx.order)
        for a, b in zip(top[1 : n], bottom[: n - 1]):
            extra = extra * ev.binom(a - an, b - an) * ev.binom_inv(a, b)
        # A_n-bar(x)
        extra = extra * ev.K.zeta(ev._step * (-an) * ev.ctx.log_code(x))
        rhs = rhs + extra
    return Relation("match" if lhs == rhs else "mismatch", case, lhs, rhs)


def relate_star_greene(top: Sequence[MultChar], bottom: Sequence[MultChar], x: FqElem) -> Relation:
    """Check the star/Greene relation where one is known, else report uncovered."""
    return relate_star_greene_idx(evaluator(x.ctx), _indices(top), _indices(bottom), x.code)
