"""Building blocks on the q-disk: Pochhammer products, Lambert sums,
divisor arithmetic, Bernoulli numbers, and small exact constants.

Everything here is elementary (no elliptic quantities); the elliptic and
theta layers are built on top of these primitives.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from scipy.special import zeta as _scipy_zeta

from .numutil import (
    DEFAULT_POLICY,
    NonConvergenceError,
    TruncationPolicy,
    _bump_terms,
    sum_series,
)

__all__ = [
    "qpochhammer",
    "euler_product",
    "lambert_sum",
    "divisor_expand",
    "divisors",
    "divisor_count",
    "divisor_sigma",
    "bernoulli",
    "zeta_value",
    "fermi_derivative_constant",
    "kronecker_symbol",
    "dirichlet_chi8",
]


def qpochhammer(
    a: complex,
    q: complex,
    n: int | None = None,
    *,
    policy: TruncationPolicy | None = None,
) -> complex:
    """q-shifted factorial ``(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k)``.

    ``n=None`` gives the infinite product, which converges for ``|q| < 1``;
    factors are multiplied until the deviation ``|a q^k|`` falls below the
    policy's tail cutoff for several consecutive steps.
    """
    a = complex(a)
    q = complex(q)
    if n is not None:
        if n < 0:
            raise ValueError("finite q-Pochhammer needs n >= 0")
        prod = 1.0 + 0.0j
        qk = 1.0 + 0.0j
        for _ in range(n):
            prod *= 1.0 - a * qk
            qk *= q
        _bump_terms(n)
        return prod
    if abs(q) >= 1.0:
        raise ValueError("infinite q-Pochhammer requires |q| < 1")
    pol = policy or DEFAULT_POLICY
    prod = 1.0 + 0.0j
    qk = 1.0 + 0.0j
    small = 0
    for used in range(1, pol.max_terms + 1):
        factor_dev = a * qk
        prod *= 1.0 - factor_dev
        qk *= q
        if abs(factor_dev) <= pol.rel_tail_cutoff:
            small += 1
            if small >= pol.stagnation_window:
                _bump_terms(used)
                return prod
        else:
            small = 0
    raise NonConvergenceError(f"q-Pochhammer product did not converge in {pol.max_terms} factors")


def euler_product(q: complex, *, policy: TruncationPolicy | None = None) -> complex:
    """``prod_{n>=1} (1 - q^n)`` for ``|q| < 1``."""
    return qpochhammer(q, q, policy=policy)


def lambert_sum(
    q: complex,
    weight: Callable[[int], complex],
    *,
    policy: TruncationPolicy | None = None,
) -> complex:
    """``sum_{n>=1} weight(n) q^n / (1 - q^n)`` for ``|q| < 1``."""
    q = complex(q)
    if abs(q) >= 1.0:
        raise ValueError("Lambert sum requires |q| < 1")

    def term(n: int) -> complex:
        qn = q**n
        return complex(weight(n)) * qn / (1.0 - qn)

    return sum_series(term, start=1, policy=policy).value


def divisor_expand(
    q: complex,
    weight: Callable[[int], complex],
    *,
    policy: TruncationPolicy | None = None,
) -> complex:
    """``sum_{m>=1} (sum_{d | m} weight(d)) q^m``.

    Power-series dual of :func:`lambert_sum`: grouping the double sum
    ``sum_n weight(n) sum_k q^{nk}`` by the product ``m = nk`` turns the
    geometric denominators into divisor sums, so both evaluators must agree
    wherever both converge.
    """
    q = complex(q)
    if abs(q) >= 1.0:
        raise ValueError("divisor expansion requires |q| < 1")

    def term(m: int) -> complex:
        coeff = sum(complex(weight(d)) for d in divisors(m))
        return coeff * q**m

    return sum_series(term, start=1, policy=policy).value


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``n >= 1``."""
    if n < 1:
        raise ValueError("divisors defined for n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_count(n: int) -> int:
    """Number of positive divisors ``d(n)``."""
    return len(divisors(n))


def divisor_sigma(n: int, k: int = 1) -> int:
    """Divisor power sum ``sigma_k(n) = sum_{d | n} d^k``."""
    return sum(d**k for d in divisors(n))


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` (convention ``B_1 = -1/2``) as an exact fraction.

    Computed by the defining recurrence
    ``sum_{j=0}^{n} C(n+1, j) B_j = 0`` for ``n >= 1``.
    """
    if n < 0:
        raise ValueError("Bernoulli numbers defined for n >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


def zeta_value(s: int | float) -> float:
    """Riemann zeta at real ``s != 1``.

    Positive arguments go through scipy; zero and negative integers use the
    exact Bernoulli evaluation ``zeta(-n) = -B_{n+1}/(n+1)``.
    """
    if s == 1:
        raise ValueError("zeta has a pole at s = 1")
    if s > 1:
        return float(_scipy_zeta(s))
    if float(s).is_integer():
        n = -int(s)
        return float((-1) ** n * bernoulli(n + 1) / (n + 1))
    raise ValueError("negative non-integer zeta arguments are not needed here")


@lru_cache(maxsize=None)
def fermi_derivative_constant(nu: int) -> Fraction:
    """``2 * (d/dx)^nu [1 / (e^x + 1)]`` at ``x = 0``, as an exact fraction.

    Writing ``1/(e^x+1)`` through the generating function of
    ``2(1 - 2^n) B_n`` gives the closed form
    ``2 (1 - 2^(nu+1)) B_{nu+1} / (nu + 1)``; the value vanishes for every
    even ``nu > 0``.
    """
    if nu < 0:
        raise ValueError("derivative order must be >= 0")
    return 2 * (1 - Fraction(2) ** (nu + 1)) * bernoulli(nu + 1) / (nu + 1)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol ``(a / n)`` by the reciprocity recursion.

    Extends the Jacobi symbol to arbitrary ``n`` via the supplements
    ``(a / 2) = 0, 1, -1`` for ``a`` even, ``a = +-1 (mod 8)``,
    ``a = +-3 (mod 8)`` and ``(a / -1) = sign``.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        # quadratic reciprocity for odd coprime pair
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def dirichlet_chi8(n: int) -> int:
    """Real character mod 8: 0 on evens, -1 for n = 1,3 (mod 8), +1 for n = 5,7 (mod 8).

    Equals the Kronecker symbol ``((n + 2) / 8)``.
    """
    return kronecker_symbol(n + 2, 8)
