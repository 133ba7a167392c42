"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored in the power basis ``1, zeta, ..., zeta^(d-1)`` with
``d = phi(n)``, i.e. reduced modulo the n-th cyclotomic polynomial, as an integer
numerator vector over a positive denominator.  The canonical form (content of
numerator and denominator coprime) makes equality a component-wise comparison.

Numerators live in numpy int64 arrays while products provably fit in 62 bits;
otherwise the arithmetic drops to object arrays of Python ints, so results are
always exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

import numpy as np
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert

from .errors import BoundExceeded, ConductorMismatch, DivisionByZero, NotDivisible

MAX_CONDUCTOR = 4096
_LIMIT = 1 << 62

Number = Union[int, Fraction, "CycNum"]


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # integer polynomials, low degree first, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int, max_n: int = MAX_CONDUCTOR) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Built as (x^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    if n > max_n:
        raise BoundExceeded(n)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d, max_n))
    return tuple(poly)


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.ndim == 1 and a.size <= 64:
        # cheaper than two numpy reductions at these sizes
        return max(map(abs, a.tolist()))
    return int(np.abs(a).max())


def _tighten(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and _maxabs(a) < _LIMIT:
        return a.astype(np.int64)
    return a


def _as_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


class CyclotomicField:
    """Shared reduction tables for one conductor ``n``."""

    def __init__(self, n: int):
        self.n = n
        self.poly = cyclotomic_poly(n)
        d = self.degree = len(self.poly) - 1
        # rows: x^k mod Phi_n for k = 0 .. n-1
        table = np.zeros((n, d), dtype=object)
        cur = [0] * d
        cur[0] = 1
        for k in range(n):
            table[k] = cur
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * self.poly[i] for i, c in enumerate(cur)]
        self._tmax = _maxabs(table)
        self._table_obj = table
        self._table = table.astype(np.int64)
        fold = np.arange(max(2 * d - 1, 1)) % n
        self._fold = self._table[fold]
        self._fold_obj = table[fold]
        self.zero_raw = np.zeros(d, dtype=np.int64)
        self.one_raw = self._table[0].copy()
        self._pair_fold = None

    # -- raw numerator kernels --------------------------------------------------
    def reduce_cyclic(self, acc: np.ndarray) -> np.ndarray:
        """Reduce a length-n vector of coefficients of 1, zeta, ..., zeta^(n-1)."""
        if acc.dtype != object and _maxabs(acc) * self.n * self._tmax < _LIMIT:
            return acc @ self._table
        return _tighten(_as_object(acc).dot(self._table_obj))

    def mul_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        d = self.degree
        if a.dtype != object and b.dtype != object:
            bound = _maxabs(a) * _maxabs(b) * d * (2 * d - 1) * self._tmax
            if bound < _LIMIT:
                return np.convolve(a, b) @ self._fold
        return _tighten(np.convolve(_as_object(a), _as_object(b)).dot(self._fold_obj))

    def dot_raw(self, rows_a: Sequence[np.ndarray], rows_b: Sequence[np.ndarray]) -> np.ndarray:
        """Reduced numerator of sum_i rows_a[i] * rows_b[i]."""
        d = self.degree
        A = np.array(rows_a)
        B = np.array(rows_b)
        if A.dtype != object and B.dtype != object:
            bound = _maxabs(A) * _maxabs(B) * len(A) * d * d * self._tmax
            if bound < _LIMIT:
                if self._pair_fold is None:
                    i, j = np.divmod(np.arange(d * d), d)
                    self._pair_fold = self._table[(i + j) % self.n]
                return np.einsum("pi,pj->ij", A, B).reshape(-1) @ self._pair_fold
        total = self.zero_raw
        for a, b in zip(rows_a, rows_b):
            total = self.add_raw(total, self.mul_raw(a, b))
        return total

    def add_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.dtype != object and b.dtype != object and _maxabs(a) + _maxabs(b) < _LIMIT:
            return a + b
        return _tighten(_as_object(a) + _as_object(b))

    def scale_raw(self, a: np.ndarray, c: int) -> np.ndarray:
        if a.dtype != object and _maxabs(a) * abs(c) < _LIMIT:
            return a * c
        return _tighten(_as_object(a) * c)

    def monomial_raw(self, e: int) -> np.ndarray:
        return self._table[e % self.n].copy()

    def twisted_sum(self, rows: Sequence[np.ndarray], exps: Sequence[int]) -> np.ndarray:
        """Reduced numerator of sum_i rows[i] * zeta_n^exps[i]."""
        n, d = self.n, self.degree
        bound = sum(_maxabs(r) for r in rows)
        obj = any(r.dtype == object for r in rows) or bound >= _LIMIT
        acc = np.zeros(n, dtype=object if obj else np.int64)
        idx = np.arange(d)
        for r, e in zip(rows, exps):
            pos = (idx + e) % n
            acc[pos] += r
        return self.reduce_cyclic(acc)

    def conjugate_raw(self, a: np.ndarray, k: int) -> np.ndarray:
        """Image of ``a`` under the automorphism zeta -> zeta^k (gcd(k, n) = 1)."""
        acc = np.zeros(self.n, dtype=a.dtype)
        np.add.at(acc, (np.arange(self.degree) * k) % self.n, a)
        return self.reduce_cyclic(acc)

    # -- element constructors ---------------------------------------------------
    def element(self, num: Iterable[int] | np.ndarray, den: int = 1) -> CycNum:
        arr = np.asarray(list(num) if not isinstance(num, np.ndarray) else num)
        if arr.dtype != object:
            arr = arr.astype(np.int64)
        return CycNum._make(self, _tighten(arr), int(den))

    def from_rational(self, r: int | Fraction) -> CycNum:
        r = Fraction(r)
        num = self.one_raw.astype(object) * r.numerator
        return CycNum._make(self, _tighten(num), r.denominator)

    def zeta(self, e: int = 1) -> CycNum:
        return CycNum(self, self.monomial_raw(e), 1)

    @property
    def zero(self) -> CycNum:
        return CycNum(self, self.zero_raw.copy(), 1)

    @property
    def one(self) -> CycNum:
        return CycNum(self, self.one_raw.copy(), 1)

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CyclotomicField:
    if n > MAX_CONDUCTOR:
        raise BoundExceeded(n)
    return CyclotomicField(n)


class CycNum:
    """An exact element of Q(zeta_n) in canonical form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CyclotomicField, num: np.ndarray, den: int = 1):
        # trusted constructor: ``num`` already reduced mod Phi_n, ``den`` > 0 and coprime
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, field: CyclotomicField, num: np.ndarray, den: int) -> CycNum:
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num, den = -num, -den
        if den != 1:
            if num.dtype == object:
                g = gcd(den, *(int(v) for v in num))
            else:
                g = gcd(den, int(np.gcd.reduce(num))) if num.size else den
            if g > 1:
                num = num // g
                den //= g
        return cls(field, num, den)

    # -- accessors ------------------------------------------------------------
    @property
    def conductor(self) -> int:
        return self.field.n

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.num)

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_integral(self) -> bool:
        return self.den == 1

    def to_rational(self) -> Fraction | None:
        """The value as a Fraction, or None when it is not rational."""
        if self.num[1:].any():
            return None
        return Fraction(int(self.num[0]), self.den)

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise ConductorMismatch(f"{self.conductor} != {other.conductor}")
            return other
        if isinstance(other, (int, np.integer, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other) -> CycNum:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        if self.den == o.den:
            return CycNum._make(f, f.add_raw(self.num, o.num), self.den)
        return CycNum._make(
            f, f.add_raw(f.scale_raw(self.num, o.den), f.scale_raw(o.num, self.den)), self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.field, -self.num, self.den)

    def __sub__(self, other) -> CycNum:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> CycNum:
        return (-self) + other

    def __mul__(self, other) -> CycNum:
        if isinstance(other, (int, np.integer)):
            return CycNum._make(self.field, self.field.scale_raw(self.num, int(other)), self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        return CycNum._make(f, f.mul_raw(self.num, o.num), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycNum:
        if isinstance(other, (int, np.integer)) and other:
            return CycNum._make(self.field, self.num, self.den * int(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other) -> CycNum:
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> CycNum:
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.conductor)
        f = self.field
        rat = self.to_rational()
        if rat is not None:
            return f.from_rational(1 / rat)
        a = dup_strip([QQ(int(c)) for c in reversed(self.coeffs)])
        phi = [QQ(c) for c in reversed(f.poly)]
        inv = list(reversed(dup_invert(a, phi, QQ)))
        inv += [QQ(0)] * (f.degree - len(inv))
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        num = [int(c.numerator) * (den // int(c.denominator)) for c in inv]
        # multiply back by our own denominator: (num/den)^-1 = den_self * inv
        return f.element(np.array(num, dtype=object) * self.den, den)

    def conjugate(self, k: int) -> CycNum:
        """Galois conjugate zeta -> zeta^k."""
        if gcd(k, self.conductor) != 1:
            raise ValueError(f"{k} is not a unit mod {self.conductor}")
        return CycNum(self.field, self.field.conjugate_raw(self.num, k), self.den)

    def embed(self, n: int) -> CycNum:
        """Image in Q(zeta_n) under zeta_m -> zeta_n^(n/m)."""
        m = self.conductor
        if n % m:
            raise NotDivisible(f"{m} does not divide {n}")
        target = cyclotomic_field(n)
        acc = np.zeros(n, dtype=object if self.num.dtype == object else np.int64)
        step = n // m
        acc[np.arange(self.field.degree) * step] = self.num
        return CycNum(target, target.reduce_cyclic(acc), self.den)

    # -- comparison ---------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer, Fraction)):
            return self.to_rational() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        if other.field is not self.field:
            return False
        return self.den == other.den and bool(np.array_equal(self.num, other.num))

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs, self.den))
        return self._hash

    # -- rendering ----------------------------------------------------------------
    def to_dict(self) -> dict:
        return {"conductor": self.conductor, "num": list(self.coeffs), "den": self.den}

    def __str__(self) -> str:
        rat = self.to_rational()
        if rat is not None:
            return str(rat)
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i and c in (1, -1):
                terms.append(("-" if c < 0 else "+") + mono)
            else:
                terms.append(f"{c:+d}" + ("*" + mono if mono else ""))
        body = "".join(terms).lstrip("+")
        return f"({body})/{self.den}" if self.den != 1 else body

    def __repr__(self) -> str:
        return f"CycNum(n={self.conductor}, num={list(self.coeffs)}, den={self.den})"


# -- functional API ---------------------------------------------------------------
def zeta_pow(n: int, e: int) -> CycNum:
    """zeta_n^(e mod n) in canonical form."""
    return cyclotomic_field(n).zeta(e)


def ring_ops(a: CycNum, b: CycNum, op: str) -> CycNum:
    if a.conductor != b.conductor:
        raise ConductorMismatch(f"{a.conductor} != {b.conductor}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def invert(a: CycNum) -> CycNum:
    return a.inverse()


def embed(a: CycNum, n: int) -> CycNum:
    return a.embed(n)


def to_rational(a: CycNum) -> Fraction | None:
    return a.to_rational()
