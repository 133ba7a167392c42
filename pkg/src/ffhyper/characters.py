"""Multiplicative characters of F_q^* and the fixed additive character.

The character group is cyclic of order q - 1; ``chi_j`` is determined by
``chi_j(g^a) = zeta_{q-1}^(j a)`` for the field's fixed generator ``g``, and every
character is extended to F_q by ``chi(0) = 0`` (the trivial one included).
Values are returned directly at the field's conductor ``n = lcm(p, q - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .cyclotomic import CycNum, cyclotomic_field
from .errors import EvenCharacteristic
from .finite_field import FieldCtx, FqElem


@dataclass(frozen=True)
class MultChar:
    ctx: FieldCtx = field(repr=False)
    index: int

    def __post_init__(self):
        object.__setattr__(self, "index", int(self.index) % self.ctx.order)

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def __mul__(self, other: MultChar) -> MultChar:
        _same_field(self, other)
        return MultChar(self.ctx, self.index + other.index)

    def __truediv__(self, other: MultChar) -> MultChar:
        _same_field(self, other)
        return MultChar(self.ctx, self.index - other.index)

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.ctx, self.index * e)

    def conj(self) -> MultChar:
        """The inverse character, chi-bar."""
        return MultChar(self.ctx, -self.index)

    def __call__(self, x) -> CycNum:
        return char_eval(self, x)

    def __repr__(self) -> str:
        return f"chi_{self.index}"


def _same_field(a: MultChar, b: MultChar) -> None:
    if a.ctx is not b.ctx:
        raise ValueError("characters of different fields")


def characters(ctx: FieldCtx) -> Iterator[MultChar]:
    for j in range(ctx.order):
        yield MultChar(ctx, j)


def trivial(ctx: FieldCtx) -> MultChar:
    return MultChar(ctx, 0)


def quadratic(ctx: FieldCtx) -> MultChar:
    """phi, the unique character of order 2 (odd q only)."""
    if ctx.p == 2:
        raise EvenCharacteristic(f"q = {ctx.q} has no quadratic character")
    return MultChar(ctx, ctx.order // 2)


def char_exponent(ctx: FieldCtx, j: int, x_log: int) -> int:
    """Exponent e with chi_j(g^x_log) = zeta_n^e."""
    n = ctx.conductor
    return (n // ctx.order) * j * x_log % n


def char_eval(chi: MultChar, x) -> CycNum:
    ctx = chi.ctx
    x = ctx(x)
    K = cyclotomic_field(ctx.conductor)
    if x.is_zero():
        return K.zero
    return K.zeta(char_exponent(ctx, chi.index, ctx.log_code(x.code)))


def additive_eval(ctx: FieldCtx, x, scale=1) -> CycNum:
    """theta(scale * x) = zeta_p^Tr(scale * x), embedded at the conductor."""
    code = ctx.mul_code(ctx(x).code, ctx(scale).code)
    n = ctx.conductor
    return cyclotomic_field(n).zeta((n // ctx.p) * ctx.trace_code(code))


def char_ops(chi: MultChar, psi: MultChar | None, op: str) -> MultChar:
    if op == "mul":
        return chi * psi
    if op == "inv":
        return chi.conj()
    raise ValueError(f"unknown character operation {op!r}")


def minus_one_sign(ctx: FieldCtx, j: int) -> int:
    """chi_j(-1) as +1 or -1."""
    return -1 if (j * ctx.minus_one_log) % ctx.order else 1


def is_square_index(ctx: FieldCtx, j: int) -> bool:
    return ctx.order % 2 == 1 or j % 2 == 0


def square_root_indices(ctx: FieldCtx, j: int) -> list[int]:
    """All r with 2r = j mod q - 1, in increasing order."""
    N = ctx.order
    j %= N
    if N % 2 == 1:
        # squaring is a bijection on a group of odd order
        return [j * (N + 1) // 2 % N]
    if j % 2:
        return []
    return sorted({j // 2, j // 2 + N // 2})


def is_square(chi: MultChar) -> bool:
    return is_square_index(chi.ctx, chi.index)


def square_roots(chi: MultChar) -> list[MultChar]:
    return [MultChar(chi.ctx, r) for r in square_root_indices(chi.ctx, chi.index)]


def delta(chi: MultChar) -> int:
    return 1 if chi.index == 0 else 0
