"""Finite fields F_q, q = p^k, with a fixed generator and a full discrete-log table.

Elements are encoded as integer codes ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` where
``(c_0, ..., c_{k-1})`` are the coordinates in the power basis of the modulus.
All multiplicative work goes through the exp/log tables built at construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterator, Sequence

import numpy as np
from sympy import isprime, perfect_power, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from .errors import BoundExceeded, DivisionByZero, LogOfZero, NotPrime, NotPrimePower

DEFAULT_MAX_Q = 1 << 20


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, k)`` with ``q == p**k``."""
    if q < 2:
        raise NotPrimePower(q)
    if isprime(q):
        return q, 1
    pp = perfect_power(q)
    if pp:
        base, k = pp
        # perfect_power may return a composite base (e.g. 64 -> 8^2)
        if isprime(base):
            return int(base), int(k)
        sub = prime_power(int(base))
        return sub[0], sub[1] * int(k)
    raise NotPrimePower(q)


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    # a, b: length-k coefficient lists (low degree first); modulus monic of degree k
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg] % p
        if c:
            for i in range(k):
                prod[deg - k + i] -= c * modulus[i]
        prod[deg] = 0
    return [c % p for c in prod[:k]]


def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    # monic x^k + c_{k-1} x^{k-1} + ... + c_0, scanned in increasing base-p value
    # of (c_{k-1}, ..., c_0)
    for m in range(p**k):
        low = [(m // p**i) % p for i in range(k)]
        high_first = [1] + low[::-1]
        if gf_irreducible_p(high_first, p, ZZ):
            return tuple(low) + (1,)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldCtx:
    """The finite field with ``q = p**k`` elements.

    Construction picks the modulus and generator deterministically, so two
    contexts built from the same ``(p, k)`` agree element for element.
    Instances are immutable after ``__init__`` and use identity equality.
    """

    def __init__(self, p: int, k: int = 1, max_q: int = DEFAULT_MAX_Q):
        if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
            raise NotPrime(p)
        if k < 1:
            raise ValueError(f"extension degree must be positive, got {k}")
        p, k = int(p), int(k)
        q = p**k
        if q > max_q:
            raise BoundExceeded(q)
        self.p, self.k, self.q = p, k, q
        self.order = q - 1
        self.conductor = p * (q - 1) // gcd(p, q - 1)

        powers = p ** np.arange(k, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        self._digits = (codes[:, None] // powers[None, :]) % p
        self._powers = powers

        if k == 1:
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            self.modulus = _first_irreducible(p, k)

        self.generator_code = self._find_generator()
        exp = np.empty(q - 1, dtype=np.int64)
        cur = 1
        for a in range(q - 1):
            exp[a] = cur
            cur = self._slow_mul(cur, self.generator_code)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        self._exp = exp
        self._log = log

        # Tr is F_p-linear; evaluate it on the power basis and extend.
        basis_traces = []
        for j in range(k):
            acc = 0
            bj = p**j
            for i in range(k):
                acc = self.add_code(acc, self.pow_code(bj, p**i))
            if acc >= p:
                raise AssertionError("trace landed outside the prime field")  # pragma: no cover
            basis_traces.append(acc)
        self._trace = (self._digits @ np.array(basis_traces, dtype=np.int64)) % p
        self._neg = ((-self._digits) % p) @ powers
        self.minus_one_log = 0 if p == 2 else (q - 1) // 2

    # -- construction helpers -------------------------------------------------
    def _code_to_list(self, c: int) -> list[int]:
        return [int(v) for v in self._digits[c]]

    def _list_to_code(self, coeffs: Sequence[int]) -> int:
        return int(sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def _slow_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self._list_to_code(
            _poly_mulmod(self._code_to_list(a), self._code_to_list(b), self.modulus, self.p)
        )

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = primefactors(n)
        for c in range(1, self.q):
            if all(self._slow_pow(c, n // r) != 1 for r in factors):
                return c
        raise AssertionError("no generator found")  # pragma: no cover

    # -- code-level arithmetic (ints in [0, q)) -------------------------------
    def add_code(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return int(((self._digits[a] + self._digits[b]) % self.p) @ self._powers)

    def neg_code(self, a: int) -> int:
        return int(self._neg[a])

    def sub_code(self, a: int, b: int) -> int:
        return self.add_code(a, int(self._neg[b]))

    def mul_code(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % self.order])

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in F_%d" % self.q)
        return int(self._exp[(-self._log[a]) % self.order])

    def pow_code(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0 if e else 1
        return int(self._exp[(self._log[a] * e) % self.order])

    def log_code(self, a: int) -> int:
        if a == 0:
            raise LogOfZero("discrete log of zero")
        return int(self._log[a])

    def exp_code(self, e: int) -> int:
        return int(self._exp[e % self.order])

    def trace_code(self, a: int) -> int:
        return int(self._trace[a])

    # vectorised forms used by the character-sum kernels
    def codes_sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return ((self._digits[a] - self._digits[b]) % self.p) @ self._powers

    @property
    def log_table(self) -> np.ndarray:
        return self._log

    @property
    def exp_table(self) -> np.ndarray:
        return self._exp

    @property
    def trace_table(self) -> np.ndarray:
        return self._trace

    # -- element API -----------------------------------------------------------
    def __call__(self, value) -> FqElem:
        """Coerce an integer (image of Z -> F_q) or a coefficient list."""
        if isinstance(value, FqElem):
            if value.ctx is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        return FqElem(self, int(value) % self.p)

    def from_coeffs(self, coeffs: Sequence[int]) -> FqElem:
        if len(coeffs) > self.k:
            raise ValueError(f"expected at most {self.k} coefficients")
        return FqElem(self, self._list_to_code(coeffs))

    def from_code(self, code: int) -> FqElem:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for F_{self.q}")
        return FqElem(self, int(code))

    def gen_pow(self, e: int) -> FqElem:
        return FqElem(self, self.exp_code(e))

    @property
    def zero(self) -> FqElem:
        return FqElem(self, 0)

    @property
    def one(self) -> FqElem:
        return FqElem(self, 1)

    @property
    def minus_one(self) -> FqElem:
        return FqElem(self, self.neg_code(1))

    @property
    def generator(self) -> FqElem:
        return FqElem(self, self.generator_code)

    def elements(self) -> Iterator[FqElem]:
        for c in range(self.q):
            yield FqElem(self, c)

    def nonzero(self) -> Iterator[FqElem]:
        for c in range(1, self.q):
            yield FqElem(self, c)

    def describe(self) -> dict:
        """JSON-friendly description of the model of F_q in use."""
        return {
            "p": self.p,
            "k": self.k,
            "modulus": list(self.modulus),
            "generator": self._code_to_list(self.generator_code),
        }

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, k={self.k})"


@dataclass(frozen=True)
class FqElem:
    ctx: FieldCtx = field(repr=False)
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.ctx._code_to_list(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.ctx is not self.ctx:
                raise ValueError("elements from different fields")
            return other.code
        return self.ctx(other).code

    def __add__(self, other) -> FqElem:
        return FqElem(self.ctx, self.ctx.add_code(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other) -> FqElem:
        return FqElem(self.ctx, self.ctx.sub_code(self.code, self._other(other)))

    def __rsub__(self, other) -> FqElem:
        return FqElem(self.ctx, self.ctx.sub_code(self._other(other), self.code))

    def __neg__(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.neg_code(self.code))

    def __mul__(self, other) -> FqElem:
        return FqElem(self.ctx, self.ctx.mul_code(self.code, self._other(other)))

    __rmul__ = __mul__

    def inverse(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.inv_code(self.code))

    def __truediv__(self, other) -> FqElem:
        return self * FqElem(self.ctx, self.ctx.inv_code(self._other(other)))

    def __pow__(self, e: int) -> FqElem:
        return FqElem(self.ctx, self.ctx.pow_code(self.code, e))

    def __repr__(self) -> str:
        if self.ctx.k == 1:
            return f"F{self.ctx.q}({self.code})"
        return f"F{self.ctx.q}{list(self.coeffs)}"


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> FieldCtx:
    return FieldCtx(p, k, max_q=p**k)


def build_field(p: int, k: int = 1, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Return the (cached) context for F_{p^k}."""
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise NotPrime(p)
    if k < 1:
        raise ValueError(f"extension degree must be positive, got {k}")
    if p**k > max_q:
        raise BoundExceeded(p**k)
    return _cached_field(int(p), int(k))


def field_of_order(q: int, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    p, k = prime_power(q)
    return build_field(p, k, max_q=max_q)


def arith(ctx: FieldCtx, op: str, *operands) -> FqElem:
    """Dispatch ``op`` in {add, sub, mul, inv, pow} on field elements."""
    xs = [ctx(v) for v in operands[:2]] if op != "pow" else [ctx(operands[0])]
    if op == "add":
        return xs[0] + xs[1]
    if op == "sub":
        return xs[0] - xs[1]
    if op == "mul":
        return xs[0] * xs[1]
    if op == "inv":
        return xs[0].inverse()
    if op == "pow":
        return xs[0] ** int(operands[1])
    raise ValueError(f"unknown field operation {op!r}")


def trace(ctx: FieldCtx, x) -> int:
    """Absolute trace Tr_{F_q/F_p}(x), returned as an integer in [0, p)."""
    return ctx.trace_code(ctx(x).code)


def dlog(ctx: FieldCtx, x) -> int:
    """Exponent ``a`` in [0, q-2] with ``g**a == x``."""
    return ctx.log_code(ctx(x).code)
