"""Shared numerical machinery.

Truncated series summation with geometric tail estimates, continued-fraction
evaluation by backward recurrence with depth doubling, Richardson-extrapolated
numerical derivatives, and complex line-segment quadrature.  Every series-based
evaluator in this package routes through :func:`sum_series` so that term counts
can be instrumented uniformly.
"""

from __future__ import annotations

import cmath
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterator

from scipy.integrate import quad

__all__ = [
    "TruncationPolicy",
    "SeriesValue",
    "NonConvergenceError",
    "PoleError",
    "DEFAULT_POLICY",
    "sum_series",
    "continued_fraction",
    "numeric_derivative",
    "complex_quad",
    "principal_power",
    "term_counter",
]


class NonConvergenceError(RuntimeError):
    """Raised when a series or continued fraction fails to stabilize."""


class PoleError(ZeroDivisionError):
    """Raised when an evaluation point sits on (or numerically at) a pole."""


@dataclass(frozen=True)
class TruncationPolicy:
    """Stopping rules for adaptive series summation.

    Attributes
    ----------
    rel_tail_cutoff : float
        Summation stops once the estimated tail is below this fraction of
        the partial sum's scale.
    max_terms : int
        Hard cap; exceeding it raises :class:`NonConvergenceError`.
    stagnation_window : int
        Number of consecutive negligible terms required before stopping,
        so that structurally zero terms (e.g. odd-index gaps) do not end
        the sum prematurely.
    """

    rel_tail_cutoff: float = 1e-16
    max_terms: int = 100_000
    stagnation_window: int = 8


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SeriesValue:
    """Value of a truncated series plus convergence diagnostics."""

    value: complex
    terms_used: int
    est_tail: float
    converged: bool


_tls = threading.local()


@contextmanager
def term_counter() -> Iterator[Callable[[], int]]:
    """Count series/fraction terms evaluated in this thread.

    Yields a zero-argument callable returning the running count.  Nested
    counters stack; each level sees only the work done inside it plus its
    nested levels (inner work bubbles up to the outer count).
    """
    prev = getattr(_tls, "count", None)
    _tls.count = 0
    try:
        yield lambda: _tls.count
    finally:
        inner = _tls.count
        if prev is None:
            _tls.count = None
        else:
            _tls.count = prev + inner


def _bump_terms(n: int) -> None:
    count = getattr(_tls, "count", None)
    if count is not None:
        _tls.count = count + n


def sum_series(
    term: Callable[[int], complex],
    *,
    start: int = 0,
    policy: TruncationPolicy | None = None,
) -> SeriesValue:
    """Sum ``term(n)`` for ``n = start, start+1, ...`` until the tail is negligible.

    The tail is estimated geometrically from the ratio of the last two
    nonzero terms.  Convergence requires ``stagnation_window`` consecutive
    terms that are individually negligible relative to the accumulated sum,
    which guards against lacunary series stopping on a structural zero.

    Returns
    -------
    SeriesValue
        Truncated value with the number of terms consumed and the final
        tail estimate.

    Raises
    ------
    NonConvergenceError
        If ``policy.max_terms`` terms do not suffice.
    """
    pol = policy or DEFAULT_POLICY
    total = 0.0 + 0.0j
    prev_mag = 0.0
    est_tail = float("inf")
    consecutive_small = 0
    n = start
    used = 0
    while used < pol.max_terms:
        t = complex(term(n))
        total += t
        used += 1
        mag = abs(t)
        scale = max(1.0, abs(total))
        if mag > 0.0:
            if prev_mag > 0.0:
                ratio = min(mag / prev_mag, 0.999999)
                est_tail = mag * ratio / (1.0 - ratio)
            prev_mag = mag
        if mag <= pol.rel_tail_cutoff * scale:
            consecutive_small += 1
            if consecutive_small >= pol.stagnation_window and (
                est_tail <= pol.rel_tail_cutoff * scale or mag == 0.0
            ):
                _bump_terms(used)
                return SeriesValue(total, used, est_tail if est_tail != float("inf") else mag, True)
        else:
            consecutive_small = 0
        n += 1
    _bump_terms(used)
    raise NonConvergenceError(
        f"series did not converge within {pol.max_terms} terms (est_tail={est_tail:.3g})"
    )


def continued_fraction(
    a: Callable[[int], complex],
    b: Callable[[int], complex],
    *,
    tail_tol: float = 1e-13,
    max_depth: int = 102_400,
) -> complex:
    """Evaluate ``b(1)/(a(1) + b(2)/(a(2) + ...))`` by backward recurrence.

    Starts from a zero tail at depth 25 and doubles the depth until two
    successive evaluations agree to ``tail_tol`` (relative to the larger of
    1 and the value's magnitude).

    Raises
    ------
    NonConvergenceError
        If agreement is not reached by ``max_depth``.
    PoleError
        If a zero denominator is hit during the backward sweep.
    """

    def eval_depth(depth: int) -> complex:
        acc = 0.0 + 0.0j
        for k in range(depth, 0, -1):
            den = complex(a(k)) + acc
            if den == 0:
                raise PoleError(f"continued fraction hit a zero denominator at depth {k}")
            acc = complex(b(k)) / den
        return acc

    depth = 25
    prev = eval_depth(depth)
    total_work = depth
    while depth <= max_depth:
        depth *= 2
        cur = eval_depth(depth)
        total_work += depth
        if abs(cur - prev) <= tail_tol * max(1.0, abs(cur)):
            _bump_terms(total_work)
            return cur
        prev = cur
    _bump_terms(total_work)
    raise NonConvergenceError(f"continued fraction did not stabilize by depth {max_depth}")


def numeric_derivative(
    f: Callable[[complex], complex],
    a: complex,
    *,
    h: float | None = None,
    steps: int = 1,
) -> complex:
    """Richardson-extrapolated central difference of ``f`` at ``a``.

    Builds the central-difference triangle over step sizes ``h, h/2, ...``
    and extrapolates ``steps`` times, cancelling error terms through
    O(h^(2*steps+2)) for smooth ``f``.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if h is not None:
        step = h
    else:
        # balance h^(2*steps+2) truncation against eps/h roundoff
        step = 10.0 ** (-16.0 / (2 * steps + 3)) * max(1.0, abs(a))
        if steps == 1:
            step = 1e-5 * max(1.0, abs(a))
    row = []
    for i in range(steps + 1):
        s = step / (2.0**i)
        row.append((complex(f(a + s)) - complex(f(a - s))) / (2.0 * s))
    # Richardson triangle: column j cancels the O(h^(2j)) term.
    for j in range(1, steps + 1):
        factor = 4.0**j
        row = [
            (factor * row[i + 1] - row[i]) / (factor - 1.0)
            for i in range(len(row) - 1)
        ]
    return row[0]


def complex_quad(f: Callable[[complex], complex], a: complex, b: complex) -> complex:
    """Integrate ``f`` along the straight segment from ``a`` to ``b``."""
    a = complex(a)
    b = complex(b)
    delta = b - a

    def real_part(t: float) -> float:
        return (complex(f(a + t * delta)) * delta).real

    def imag_part(t: float) -> float:
        return (complex(f(a + t * delta)) * delta).imag

    re, _ = quad(real_part, 0.0, 1.0, limit=200, epsabs=1e-13, epsrel=1e-13)
    im, _ = quad(imag_part, 0.0, 1.0, limit=200, epsabs=1e-13, epsrel=1e-13)
    return complex(re, im)


def principal_power(w: complex, s: complex) -> complex:
    """Principal branch of ``w**s``: exp(s Log w), with exact integer powers.

    Integer exponents bypass the log to avoid spurious branch noise and to
    keep real inputs exactly real.
    """
    sc = complex(s)
    if sc.imag == 0.0 and float(sc.real).is_integer():
        n = int(sc.real)
        if w == 0 and n < 0:
            raise PoleError("0 raised to a negative power")
        return complex(w) ** n
    if w == 0:
        if sc.real > 0:
            return 0.0 + 0.0j
        raise PoleError("0 raised to a non-positive power")
    return cmath.exp(sc * cmath.log(complex(w)))
