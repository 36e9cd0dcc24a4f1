"""Generalized hypergeometric series pFq at complex argument.

Entire series only (p <= q+1 excluded; we require p <= q), evaluated by
term-ratio recursion with compensated accumulation.  The Kelvin-type
arguments make partial sums cancel by factors up to ~e^(x/sqrt(2)), so the
summation carries Neumaier compensation on both components and reports the
largest intermediate term for cancellation-aware error budgeting downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DenominatorPoleError


@dataclass(frozen=True)
class SeriesConfig:
    """Stopping control for series evaluation."""

    rel_tol: float = 1e-15
    max_terms: int = 500

    def __post_init__(self):
        if self.rel_tol <= 0.0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_SERIES = SeriesConfig()


@dataclass(frozen=True)
class EvalResult:
    """Value plus error estimate and diagnostics of one evaluation.

    ``abs_err_estimate`` follows the series rule (10x the first neglected
    term) unless an operation documents an amplified estimate.
    ``max_abs_term`` is the largest intermediate term magnitude, the input
    to cancellation budgets.  ``flags`` records fallback paths taken
    ('extrapolated', 'near_integer_averaged', 'degraded', ...).
    """

    value: complex
    abs_err_estimate: float
    terms_used: int
    converged: bool
    flags: tuple[str, ...] = ()
    max_abs_term: float = 0.0


@dataclass(frozen=True)
class HyperSpec:
    """Parameter set of a pFq evaluation: upper a_i, lower b_j, argument z."""

    upper: tuple[float, ...]
    lower: tuple[float, ...]
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        object.__setattr__(self, "z", complex(self.z))
        if len(self.upper) > len(self.lower):
            raise ValueError("series is not entire: need len(upper) <= len(lower)")


class _CompensatedSum:
    """Neumaier accumulation of a complex series, componentwise.

    Componentwise compensation keeps conjugation symmetry exact: summing the
    conjugated terms produces the exact conjugate of the sum.
    """

    __slots__ = ("re", "im", "cre", "cim")

    def __init__(self):
        self.re = 0.0
        self.im = 0.0
        self.cre = 0.0
        self.cim = 0.0

    def add(self, t: complex) -> None:
        tr, ti = t.real, t.imag
        s = self.re + tr
        if abs(self.re) >= abs(tr):
            self.cre += (self.re - s) + tr
        else:
            self.cre += (tr - s) + self.re
        self.re = s
        s = self.im + ti
        if abs(self.im) >= abs(ti):
            self.cim += (self.im - s) + ti
        else:
            self.cim += (ti - s) + self.im
        self.im = s

    def total(self) -> complex:
        return complex(self.re + self.cre, self.im + self.cim)


def sum_series(first_term: complex, ratio, cfg: SeriesConfig = DEFAULT_SERIES) -> EvalResult:
    """Sum t_0 + t_1 + ... with t_{k+1} = t_k * ratio(k).

    Stops once two consecutive terms fall below rel_tol * (1 + |sum|); a
    single small term is not safe because Kelvin-type series alternate in
    blocks of four.  The error estimate is 10x the first neglected term.
    """
    acc = _CompensatedSum()
    t = complex(first_term)
    acc.add(t)
    max_term = abs(t)
    small_run = 0
    k = 0
    while k < cfg.max_terms:
        t = t * ratio(k)
        k += 1
        acc.add(t)
        mag = abs(t)
        if mag > max_term:
            max_term = mag
        s = acc.total()
        if mag <= cfg.rel_tol * (1.0 + abs(s)):
            small_run += 1
            if small_run >= 2:
                neglected = abs(t * ratio(k))
                return EvalResult(s, 10.0 * neglected, k + 1, True, (), max_term)
        else:
            small_run = 0
    s = acc.total()
    return EvalResult(s, 10.0 * abs(t), k + 1, False, ("no_convergence",), max_term)


def pfq(spec: HyperSpec, cfg: SeriesConfig = DEFAULT_SERIES) -> EvalResult:
    """Evaluate pFq(a; b; z) = sum_k [prod (a_i)_k / prod (b_j)_k] z^k / k!.

    Raises
    ------
    DenominatorPoleError
        If any lower parameter is a nonpositive integer.
    """
    for b in spec.lower:
        if b <= 0.0 and b == math.floor(b):
            raise DenominatorPoleError(f"lower parameter {b} is a nonpositive integer")
    upper, lower, z = spec.upper, spec.lower, spec.z

    def ratio(k: int) -> complex:
        num = 1.0
        for a in upper:
            num *= a + k
        den = float(k + 1)
        for b in lower:
            den *= b + k
        return (num / den) * z

    return sum_series(1.0 + 0.0j, ratio, cfg)
