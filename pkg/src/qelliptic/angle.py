"""The inverse-hyperbolic-tangent angle sum on the q-disk.

The central object is

    angle(q, x) = 2 sum_{n>=0} atanh(q^{n+x}),      |q^x| < 1,

together with its Lambert-type rewriting, its exact x-derivative, and the
affine frame functions that tie a power ``q^a`` to a shifted argument of the
elliptic expansions.  Powers of complex ``q`` are principal throughout.
"""

from __future__ import annotations

import cmath

from .elliptic import EllipticContext
from .numutil import TruncationPolicy, principal_power, sum_series

__all__ = [
    "angle_sum",
    "angle_sum_lambert",
    "angle_derivative",
    "frame_offset",
    "frame_offset_star",
    "frame_offset_star_scaled",
]


def angle_sum(q: complex, x: complex, *, policy: TruncationPolicy | None = None) -> complex:
    """``2 sum_{n>=0} atanh(q^{n+x})`` with principal powers.

    Requires ``|q^x| < 1`` so every atanh argument stays inside the unit
    disk (terms then decay like ``q^n``).
    """
    q = complex(q)
    qx = principal_power(q, x)
    if abs(qx) >= 1.0:
        raise ValueError("angle sum needs |q^x| < 1")
    return 2.0 * sum_series(lambda n: cmath.atanh(qx * q**n), policy=policy).value


def angle_sum_lambert(q: complex, x: complex, *, policy: TruncationPolicy | None = None) -> complex:
    """Same angle as a Lambert-type sum over odd indices:

    ``2 sum_{m>=0} q^{x(2m+1)} / ((2m+1)(1 - q^{2m+1}))``.

    Obtained by expanding each atanh into its odd power series and summing
    the geometric n-direction first; agrees with :func:`angle_sum` wherever
    both converge.
    """
    q = complex(q)
    qx = principal_power(q, x)
    if abs(qx) >= 1.0:
        raise ValueError("angle sum needs |q^x| < 1")

    def term(m: int) -> complex:
        odd = 2 * m + 1
        return qx**odd / (odd * (1.0 - q**odd))

    return 2.0 * sum_series(term, policy=policy).value


def angle_derivative(q: complex, a: complex, *, policy: TruncationPolicy | None = None) -> complex:
    """Exact x-derivative of the angle at ``x = a``:

    ``2 Log(q) sum_{j>=0} q^{a(2j+1)} / (1 - q^{2j+1})``.
    """
    q = complex(q)
    qa = principal_power(q, a)

    def term(j: int) -> complex:
        odd = 2 * j + 1
        return qa**odd / (1.0 - q**odd)

    return 2.0 * cmath.log(q) * sum_series(term, policy=policy).value


def frame_offset(ctx: EllipticContext, a: complex) -> complex:
    """Shift ``t0 = -K + (4a - 2) z K`` carrying ``q^a`` into the expansion frame:
    ``q^a = i q^{1/2} exp(i pi t0 / (2K))`` exactly."""
    return -ctx.K + (4.0 * a - 2.0) * ctx.z * ctx.K


def frame_offset_star(ctx: EllipticContext, a: complex) -> complex:
    """Negated-nome companion shift ``t0* = 2 K* ((a-1) + (2a-1) z)`` with
    ``K* = k' K``; satisfies ``e^{i pi a} q^a = -q^{1/2} exp(i pi t0*/(2K*))``."""
    return 2.0 * (ctx.kprime * ctx.K) * ((a - 1.0) + (2.0 * a - 1.0) * ctx.z)


def frame_offset_star_scaled(ctx: EllipticContext, a: complex) -> complex:
    """``t0*/k'`` in closed period form: ``2(a-1) K + i (2a-1) K'``."""
    return 2.0 * (a - 1.0) * ctx.K + 1j * (2.0 * a - 1.0) * ctx.Kprime
