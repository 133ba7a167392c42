"""Shared set-up for the verifiers."""
from __future__ import annotations

import random

from ..characters import square_root_indices
from ..errors import EvenCharacteristic
from ..finite_field import FieldCtx, field_of_order
from ..hypergeometric import Evaluator, evaluator
from .report import Tally


class Session:
    """A field, its evaluator and a tally for one verifier run."""

    def __init__(self, q, theorem_id: str, odd_only: bool = False):
        ctx = q if isinstance(q, FieldCtx) else field_of_order(q)
        if odd_only and ctx.p == 2:
            raise EvenCharacteristic(f"{theorem_id} needs odd q (got q = {ctx.q})")
        self.ctx: FieldCtx = ctx
        self.ev: Evaluator = evaluator(ctx)
        self.gt = self.ev.gauss
        self.K = self.ev.K
        self.N = ctx.order
        self.q = ctx.q
        self.tally = Tally(theorem_id, ctx)
        self.m1 = ctx.neg_code(1)

    def sign(self, j: int) -> int:
        """chi_j(-1)."""
        return -1 if (j * self.ctx.minus_one_log) % self.N else 1

    def is_square(self, j: int) -> bool:
        return self.N % 2 == 1 or j % 2 == 0

    def roots(self, j: int) -> list[int]:
        return square_root_indices(self.ctx, j)

    def const(self, value) -> object:
        return self.K.from_rational(value)

    def char_at(self, j: int, code: int):
        """chi_j(x) for a field code."""
        if code == 0:
            return self.K.zero
        return self.K.zeta(self.ev._step * j * self.ctx.log_code(code))

    def sample_points(self, seed: int, key: str, extra: int = 3) -> list[int]:
        """1, -1 and up to ``extra`` further seeded nonzero field codes."""
        base = list(dict.fromkeys([1, self.m1]))
        rest = [c for c in range(1, self.q) if c not in base]
        rng = random.Random(f"{seed}:{key}:{self.q}")
        return base + sorted(rng.sample(rest, min(extra, len(rest))))
