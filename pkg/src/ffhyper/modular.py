"""Fourier coefficients of the weight-4 eta product eta^4(2z) eta^4(4z) and the
point-count identity tying them to a well-poised 4F3 over F_p.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sympy import isprime

from .cyclotomic import CycNum
from .errors import NotOddPrime
from .finite_field import build_field
from .hypergeometric import evaluator

DEFAULT_TERMS = 64


@dataclass(frozen=True)
class EtaSeries:
    """gamma(1..N) of eta^4(2z) eta^4(4z) = sum gamma(n) q^n."""

    order: int
    coeffs: tuple[int, ...]  # coeffs[n - 1] = gamma(n)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.order:
            raise IndexError(f"gamma({n}) is outside the computed range 1..{self.order}")
        return self.coeffs[n - 1]

    def __len__(self) -> int:
        return self.order


def eta_product_coeffs(N: int = DEFAULT_TERMS) -> EtaSeries:
    """Expand q * prod_{m>=1} (1 - q^{2m})^4 (1 - q^{4m})^4 through q^N."""
    if N < 1:
        raise ValueError("need at least one coefficient")
    # eta(z) carries q^(1/24); four copies at 2z and four at 4z give q^((4*2 + 4*4)/24) = q^1,
    # so only the infinite products remain and gamma(n) is the coefficient of q^(n-1) in them.
    c = [0] * N
    c[0] = 1
    for step in (2, 4):
        for k in range(step, N, step):
            for _ in range(4):
                for i in range(N - 1, k - 1, -1):
                    c[i] -= c[i - k]
    return EtaSeries(N, tuple(c))


@dataclass(frozen=True)
class PointCountCheck:
    p: int
    value: CycNum
    rational: Optional[Fraction]
    gamma: int

    @property
    def expected(self) -> int:
        return self.gamma + self.p

    @property
    def integral(self) -> bool:
        return self.rational is not None and self.rational.denominator == 1

    @property
    def match(self) -> bool:
        return self.integral and self.rational == self.expected

    @property
    def reason(self) -> str:
        if self.rational is None:
            return "value is not rational"
        if not self.integral:
            return "value is not an integer"
        return "ok" if self.match else "value differs from gamma(p) + p"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "value": self.value.to_dict(),
            "rational": None if self.rational is None else str(self.rational),
            "gamma": self.gamma,
            "gamma_plus_p": self.expected,
            "match": self.match,
            "reason": self.reason,
        }


def well_poised_quadratic_4f3(p: int) -> CycNum:
    """4F3(phi, phi, phi, phi; eps, eps, eps | 1) over F_p."""
    if p == 2 or not isprime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    ctx = build_field(p)
    h = ctx.order // 2
    return evaluator(ctx).star((h, h, h, h), (0, 0, 0), 1)


def verify_ao(p: int, series: Optional[EtaSeries] = None) -> PointCountCheck:
    """Compare the quadratic well-poised 4F3 over F_p with gamma(p) + p."""
    value = well_poised_quadratic_4f3(p)
    if series is None or series.order < p:
        series = eta_product_coeffs(max(DEFAULT_TERMS, p))
    return PointCountCheck(p, value, value.to_rational(), series[p])
