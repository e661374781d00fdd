"""Two-parameter theta sums, agile products, and Ramanujan-style q-machinery.

This module holds the q-series layer that sits above the nome/modulus
functions: bilateral theta sums with quadratic-plus-linear exponents,
restricted q-Pochhammer ("agile") products, the continued fractions
``U(a, b; q)`` and ``u0(q, a)`` together with their closed product forms,
Rogers--Ramanujan evaluators, and restricted divisor-sum logarithm series.

Conventions
-----------
* ``cayley(v) = -1 + 2/(1 - v)`` maps the fraction value ``v`` to the
  product quotient it represents; both continued fractions below have
  closed forms under this map.
* Restricted divisor sums run over factorizations ``A * B = n`` with
  ``A, B >= 1``.  Residue constraints apply to ``B`` modulo ``p``.  The
  ``multiset`` flag controls whether a divisor pair matching several of
  the requested residue classes is counted once (set semantics) or once
  per matching class (multiset semantics).
"""

from __future__ import annotations

import cmath
from typing import Callable, Iterable, Sequence

from .numutil import (
    PoleError,
    TruncationPolicy,
    continued_fraction,
    principal_power,
    sum_series,
)
from .qseries import divisors, qpochhammer

__all__ = [
    "theta3_two",
    "theta4_two",
    "agile_minus",
    "agile_plus",
    "ramanujan_quantity",
    "rr_G",
    "rr_H",
    "rr_product",
    "rr_sum",
    "rr_cf",
    "cayley",
    "u_cf",
    "u_product",
    "cayley_u_product",
    "u0_cf",
    "u0_product",
    "cayley_u0_product",
    "odd_lambert",
    "log_P",
    "odd_ratio_sum",
    "restricted_divisor_log",
]


# ---------------------------------------------------------------------------
# Bilateral two-parameter theta sums
# ---------------------------------------------------------------------------

def theta3_two(a, b, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Bilateral sum ``sum_{n in Z} q^(a n^2 + b n)``.

    Requires ``a > 0`` (more precisely ``|q^a| < 1``) for convergence.  The
    sum is folded into ``1 + sum_{n>=1} q^(a n^2) (q^(b n) + q^(-b n))``.
    """
    qa = principal_power(q, a)
    if abs(qa) >= 1.0:
        raise ValueError("theta3_two requires |q^a| < 1 for convergence")

    def term(n: int) -> complex:
        if n == 0:
            return 1.0
        quad = principal_power(q, a * n * n)
        return quad * (principal_power(q, b * n) + principal_power(q, -b * n))

    return sum_series(term, policy=policy).value


def theta4_two(a, b, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Bilateral sum ``sum_{n in Z} (-1)^n q^(a n^2 + b n)``."""
    qa = principal_power(q, a)
    if abs(qa) >= 1.0:
        raise ValueError("theta4_two requires |q^a| < 1 for convergence")

    def term(n: int) -> complex:
        if n == 0:
            return 1.0
        sign = -1.0 if n % 2 else 1.0
        quad = principal_power(q, a * n * n)
        return sign * quad * (principal_power(q, b * n) + principal_power(q, -b * n))

    return sum_series(term, policy=policy).value


# ---------------------------------------------------------------------------
# Agile products and Ramanujan quantities
# ---------------------------------------------------------------------------

def agile_minus(a, p, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Product ``prod_{n>=0} (1 - q^(p n + a)) (1 - q^(p n + p - a))``."""
    qp = principal_power(q, p)
    return qpochhammer(principal_power(q, a), qp, policy=policy) * qpochhammer(
        principal_power(q, p - a), qp, policy=policy
    )


def agile_plus(a, p, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Product ``prod_{n>=0} (1 + q^(p n + a)) (1 + q^(p n + p - a))``."""
    qp = principal_power(q, p)
    return qpochhammer(-principal_power(q, a), qp, policy=policy) * qpochhammer(
        -principal_power(q, p - a), qp, policy=policy
    )


def ramanujan_quantity(a, b, p, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Quotient ``agile_minus(a, p, q) / agile_minus(b, p, q)``."""
    den = agile_minus(b, p, q, policy=policy)
    if den == 0:
        raise PoleError("ramanujan_quantity: denominator agile product vanished")
    return agile_minus(a, p, q, policy=policy) / den


# ---------------------------------------------------------------------------
# Rogers--Ramanujan evaluators
# ---------------------------------------------------------------------------

def rr_G(q, *, policy: TruncationPolicy | None = None) -> complex:
    """Sum ``sum_{n>=0} q^(n^2) / (q; q)_n``."""
    state = {"num": 1.0 + 0.0j, "poch": 1.0 + 0.0j}

    def term(n: int) -> complex:
        if n > 0:
            # q^(n^2) = q^((n-1)^2) * q^(2n-1); (q;q)_n = (q;q)_{n-1} (1-q^n)
            state["num"] *= q ** (2 * n - 1)
            state["poch"] *= 1.0 - q**n
        return state["num"] / state["poch"]

    return sum_series(term, policy=policy).value


def rr_H(q, *, policy: TruncationPolicy | None = None) -> complex:
    """Sum ``sum_{n>=0} q^(n^2 + n) / (q; q)_n``.

    The ``n = 0`` term equals 1, so ``rr_H(0) = 1``, consistent with the
    agile-product form ``1 / agile_minus(2, 5, q)``.
    """
    state = {"num": 1.0 + 0.0j, "poch": 1.0 + 0.0j}

    def term(n: int) -> complex:
        if n > 0:
            state["num"] *= q ** (2 * n)
            state["poch"] *= 1.0 - q**n
        return state["num"] / state["poch"]

    return sum_series(term, policy=policy).value


def rr_product(q, *, policy: TruncationPolicy | None = None) -> complex:
    """``q^(1/5) * agile_minus(1, 5, q) / agile_minus(2, 5, q)``."""
    return principal_power(q, 0.2) * ramanujan_quantity(1, 2, 5, q, policy=policy)


def rr_sum(q, *, policy: TruncationPolicy | None = None) -> complex:
    """``q^(1/5) * rr_H(q) / rr_G(q)``."""
    return principal_power(q, 0.2) * rr_H(q, policy=policy) / rr_G(q, policy=policy)


def rr_cf(q, *, tail_tol: float = 1e-14) -> complex:
    """Continued fraction ``q^(1/5) / (1 + q/(1 + q^2/(1 + ...)))``."""
    q15 = principal_power(q, 0.2)

    def a_k(k: int) -> complex:
        return 1.0

    def b_k(k: int) -> complex:
        if k == 1:
            return q15
        return q ** (k - 1)

    return continued_fraction(a_k, b_k, tail_tol=tail_tol)


# ---------------------------------------------------------------------------
# The continued fractions U(a, b; q) and u0(q, a)
# ---------------------------------------------------------------------------

def cayley(v) -> complex:
    """Map ``v -> -1 + 2/(1 - v)``; raises near the pole ``v = 1``."""
    d = 1.0 - v
    if abs(d) < 1e-14:
        raise PoleError("cayley transform evaluated at v = 1")
    return -1.0 + 2.0 / d


def u_cf(a, b, q, *, tail_tol: float = 1e-13) -> complex:
    """Continued fraction with partial numerators
    ``a - b, (a - b q)(a q - b), q (a - b q^2)(a q^2 - b), ...`` over
    partial denominators ``1 - q, 1 - q^3, 1 - q^5, ...``.
    """

    def a_k(k: int) -> complex:
        return 1.0 - q ** (2 * k - 1)

    def b_k(k: int) -> complex:
        if k == 1:
            return a - b
        return q ** (k - 2) * (a - b * q ** (k - 1)) * (a * q ** (k - 1) - b)

    return continued_fraction(a_k, b_k, tail_tol=tail_tol)


def u_product(a, b, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Closed form ``(N - D)/(N + D)`` with ``N = (-a; q) (b; q)`` and
    ``D = (a; q) (-b; q)``."""
    num = qpochhammer(-a, q, policy=policy) * qpochhammer(b, q, policy=policy)
    den = qpochhammer(a, q, policy=policy) * qpochhammer(-b, q, policy=policy)
    s = num + den
    if abs(s) < 1e-300:
        raise PoleError("u_product: vanishing denominator N + D")
    return (num - den) / s


def cayley_u_product(a, b, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Quotient ``(-a; q) (b; q) / ((a; q) (-b; q))``, the cayley image of
    the product form of ``U(a, b; q)`` computed without cancellation."""
    den = qpochhammer(a, q, policy=policy) * qpochhammer(-b, q, policy=policy)
    if abs(den) < 1e-300:
        raise PoleError("cayley_u_product: vanishing denominator")
    return qpochhammer(-a, q, policy=policy) * qpochhammer(b, q, policy=policy) / den


def u0_cf(a, q, *, tail_tol: float = 1e-13) -> complex:
    """Continued fraction ``2a/(1 - q +) a^2 (1+q)^2/(1 - q^3 +)
    a^2 q (1+q^2)^2/(1 - q^5 +) ...``; requires ``|q| < 1`` and ``|q/a| < 1``."""

    def a_k(k: int) -> complex:
        return 1.0 - q ** (2 * k - 1)

    def b_k(k: int) -> complex:
        if k == 1:
            return 2.0 * a
        return a * a * q ** (k - 2) * (1.0 + q ** (k - 1)) ** 2

    return continued_fraction(a_k, b_k, tail_tol=tail_tol)


def u0_product(a, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Closed form ``(P - 1)/(P + 1)`` with ``P = ((-a; q)/(a; q))^2``."""
    p_val = cayley_u0_product(a, q, policy=policy)
    return (p_val - 1.0) / (p_val + 1.0)


def cayley_u0_product(a, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Quotient ``P = ((-a; q)/(a; q))^2``, the cayley image of ``u0(q, a)``."""
    den = qpochhammer(a, q, policy=policy)
    if abs(den) < 1e-300:
        raise PoleError("cayley_u0_product: vanishing (a; q) product")
    r = qpochhammer(-a, q, policy=policy) / den
    return r * r


# ---------------------------------------------------------------------------
# Logarithm series
# ---------------------------------------------------------------------------

def odd_lambert(z, Q, *, policy: TruncationPolicy | None = None) -> complex:
    """Sum ``sum_{m odd >= 1} z^m / (m (1 - Q^m))``; needs ``|z| < 1``."""

    def term(n: int) -> complex:
        m = 2 * n + 1
        return z**m / (m * (1.0 - Q**m))

    return sum_series(term, policy=policy).value


def log_P(A, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Series ``4 sum_{n>=0} A^(2n+1) / ((2n+1)(1 - q^(2n+1)))``, the
    logarithm of ``cayley_u0_product(A, q)``."""
    return 4.0 * odd_lambert(A, q, policy=policy)


def odd_ratio_sum(A, q, *, policy: TruncationPolicy | None = None) -> complex:
    """Sum ``sum_{n>=0} A^(2n+1) / (1 - q^(2n+1))``."""

    def term(n: int) -> complex:
        m = 2 * n + 1
        return A**m / (1.0 - q**m)

    return sum_series(term, policy=policy).value


# ---------------------------------------------------------------------------
# Restricted divisor-sum logarithm series
# ---------------------------------------------------------------------------

def restricted_divisor_log(
    q,
    p: int,
    residues: Sequence[int] | Iterable[int],
    *,
    odd_only: bool = True,
    alternating: bool = False,
    x: complex = 1.0,
    multiset: bool = False,
    policy: TruncationPolicy | None = None,
) -> complex:
    """Sum ``sum_{n>=1} q^n sum_{A B = n} w(A)`` restricted by residue class.

    The inner sum runs over factorizations ``A * B = n`` with ``A`` odd when
    ``odd_only`` and ``B mod p`` lying in ``residues``.  The weight is
    ``w(A) = (-1)^A / A`` when ``alternating`` (and then ``x`` must stay 1),
    otherwise ``w(A) = x^A / A``.

    With ``multiset=True`` a divisor pair is counted once per residue class
    it matches, so repeated classes in ``residues`` accumulate; the default
    counts each matching pair once regardless of how many classes agree.
    """
    if alternating and x != 1.0:
        raise ValueError("alternating weight does not take a power argument")
    res_list = [r % p for r in residues]
    res_set = frozenset(res_list)

    def inner(n: int) -> complex:
        total = 0.0 + 0.0j
        for A in divisors(n):
            if odd_only and A % 2 == 0:
                continue
            bmod = (n // A) % p
            if multiset:
                count = sum(1 for r in res_list if r == bmod)
            else:
                count = 1 if bmod in res_set else 0
            if not count:
                continue
            if alternating:
                w = (-1.0 if A % 2 else 1.0) / A
            else:
                w = x**A / A
            total += count * w
        return total

    def term(n_index: int) -> complex:
        n = n_index + 1
        return q**n * inner(n)

    return sum_series(term, policy=policy).value
