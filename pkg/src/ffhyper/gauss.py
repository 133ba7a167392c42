"""Gauss sums, Jacobi sums and the Helversen-Pasotto four-Gauss-sum evaluation.

A :class:`GaussTable` computes every ``g(chi_j)`` once per field by direct
summation over F_q^*, and hands out closed-form inverses
``1/g(chi) = chi(-1) g(chi-bar) / q`` (and ``-1`` for the trivial character).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .characters import MultChar, minus_one_sign
from .cyclotomic import CycNum, cyclotomic_field
from .finite_field import FieldCtx


class GaussTable:
    """Gauss sums of one field against ``theta_c(x) = theta(c x)``.

    ``scale`` is the field code of ``c``; the default table uses ``c = 1``.
    """

    def __init__(self, ctx: FieldCtx, scale: int = 1):
        if scale == 0:
            raise ValueError("the additive character must be non-trivial")
        self.ctx = ctx
        self.scale = scale
        self.field = cyclotomic_field(ctx.conductor)
        N = ctx.order
        a = np.arange(N, dtype=np.int64)
        shifted = ctx.exp_table[(a + ctx.log_code(scale)) % N]
        n = ctx.conductor
        self._add_exps = (n // ctx.p) * ctx.trace_table[shifted] % n
        self._mult_step = n // N
        self._raw: dict[int, np.ndarray] = {}
        self._sums: dict[int, CycNum] = {}
        self._invs: dict[int, CycNum] = {}
        self._pairs: dict[tuple[int, int], np.ndarray] = {}

    def raw(self, j: int) -> np.ndarray:
        """Numerator vector of g(chi_j) (Gauss sums are algebraic integers)."""
        j %= self.ctx.order
        r = self._raw.get(j)
        if r is None:
            n = self.ctx.conductor
            N = self.ctx.order
            exps = (self._mult_step * j * np.arange(N, dtype=np.int64) + self._add_exps) % n
            r = self.field.reduce_cyclic(np.bincount(exps, minlength=n).astype(np.int64))
            self._raw[j] = r
        return r

    def pair_raw(self, i: int, j: int) -> np.ndarray:
        """Numerator of g(chi_i) g(chi_j), memoised."""
        N = self.ctx.order
        key = (i % N, j % N) if i % N <= j % N else (j % N, i % N)
        r = self._pairs.get(key)
        if r is None:
            r = self.field.mul_raw(self.raw(key[0]), self.raw(key[1]))
            self._pairs[key] = r
        return r

    def __getitem__(self, j: int) -> CycNum:
        j %= self.ctx.order
        s = self._sums.get(j)
        if s is None:
            s = CycNum(self.field, self.raw(j), 1)
            self._sums[j] = s
        return s

    def inv(self, j: int) -> CycNum:
        """1/g(chi_j) in closed form."""
        ctx = self.ctx
        j %= ctx.order
        s = self._invs.get(j)
        if s is None:
            if j == 0:
                s = -self.field.one
            else:
                # g(chi) g(chi-bar) = chi(-1) q, and chi(-1) = +-1 scales by theta_c
                num = self.raw(-j) * minus_one_sign(ctx, j)
                s = CycNum._make(self.field, num, ctx.q)
            self._invs[j] = s
        return s

    def inv_raw_q(self, j: int) -> tuple[np.ndarray, int]:
        """(numerator, denominator) of 1/g(chi_j) without canonicalising."""
        j %= self.ctx.order
        if j == 0:
            return -self.field.one_raw, 1
        return self.raw(-j) * minus_one_sign(self.ctx, j), self.ctx.q

    def quot(self, nums: Sequence[int], dens: Sequence[int] = ()) -> CycNum:
        """prod g(chi_a) for a in nums divided by prod g(chi_b) for b in dens."""
        K = self.field
        raw = K.one_raw
        den = 1
        for a in nums:
            raw = K.mul_raw(raw, self.raw(a))
        for b in dens:
            r, d = self.inv_raw_q(b)
            raw = K.mul_raw(raw, r)
            den *= d
        return CycNum._make(K, raw, den)


@lru_cache(maxsize=None)
def gauss_table(ctx: FieldCtx, scale: int = 1) -> GaussTable:
    return GaussTable(ctx, scale)


class JacobiTable:
    """J(chi_a, chi_b) = sum_t chi_a(t) chi_b(1 - t), by direct summation."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.field = cyclotomic_field(ctx.conductor)
        # codes 0 and 1 are the field elements 0 and 1, where every term vanishes
        t = np.arange(2, ctx.q, dtype=np.int64)
        one_minus = ctx.codes_sub(np.ones_like(t), t)
        self._lt = ctx.log_table[t]
        self._l1 = ctx.log_table[one_minus]
        self._raw: dict[tuple[int, int], np.ndarray] = {}

    def raw(self, a: int, b: int) -> np.ndarray:
        N = self.ctx.order
        key = (a % N, b % N)
        r = self._raw.get(key)
        if r is None:
            n = self.ctx.conductor
            exps = (n // N) * (key[0] * self._lt + key[1] * self._l1) % n
            r = self.field.reduce_cyclic(np.bincount(exps, minlength=n).astype(np.int64))
            self._raw[key] = r
        return r

    def __call__(self, a: int, b: int) -> CycNum:
        return CycNum(self.field, self.raw(a, b), 1)


@lru_cache(maxsize=None)
def jacobi_table(ctx: FieldCtx) -> JacobiTable:
    return JacobiTable(ctx)


# -- functional API -------------------------------------------------------------
def gauss_sum(chi: MultChar) -> CycNum:
    return gauss_table(chi.ctx)[chi.index]


def gauss_inv(chi: MultChar) -> CycNum:
    return gauss_table(chi.ctx).inv(chi.index)


def jacobi_sum(chi: MultChar, psi: MultChar) -> CycNum:
    if chi.ctx is not psi.ctx:
        raise ValueError("characters of different fields")
    return jacobi_table(chi.ctx)(chi.index, psi.index)


def _hp_lhs_idx(gt: GaussTable, a: int, b: int, c: int, d: int) -> CycNum:
    K = gt.field
    N = gt.ctx.order
    total = K.zero_raw
    for x in range(N):
        term = K.mul_raw(gt.pair_raw(a + x, b + x), gt.pair_raw(c - x, d - x))
        total = K.add_raw(total, term)
    return CycNum._make(K, total, N)


def _hp_rhs_idx(gt: GaussTable, a: int, b: int, c: int, d: int) -> CycNum:
    ctx = gt.ctx
    main = gt.quot([a + c, a + d, b + c, b + d], [a + b + c + d])
    if (a + b + c + d) % ctx.order:
        return main
    return main + ctx.q * ctx.order * minus_one_sign(ctx, a + b)


def hp_lhs(A: MultChar, B: MultChar, C: MultChar, D: MultChar) -> CycNum:
    """(1/(q-1)) sum_chi g(A chi) g(B chi) g(C chi-bar) g(D chi-bar)."""
    return _hp_lhs_idx(gauss_table(A.ctx), A.index, B.index, C.index, D.index)


def hp_rhs(A: MultChar, B: MultChar, C: MultChar, D: MultChar) -> CycNum:
    """g(AC) g(AD) g(BC) g(BD) / g(ABCD) + q (q-1) AB(-1) delta(ABCD)."""
    return _hp_rhs_idx(gauss_table(A.ctx), A.index, B.index, C.index, D.index)
