"""The phase angle theta(t) of the critical line, by two routes.

theta(t) = -(t/2) log pi + arg Gamma(1/4 + it/2).  The reference route
goes through a Stirling-series complex log-gamma whose imaginary part is
the analytic (unwrapped) argument, so theta is smooth in t; the series
route is the classical asymptotic expansion driven by the F-numbers.
The cousin expansion of log|Gamma(1/4 + it/2)| is driven by the
E-numbers, as is the small quantity omega used by the derivative-ordered
remainder series.

The exact formulas behind the series routes also contain the terms
-1/4 log(1 + e^(-2pi t)) and 1/2 arctan(e^(-pi t)); for t >= 10 these
are below e^(-20 pi) ~ 1e-27 and are deliberately dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import log, mp, mpc, mpf, pi, sin

from .errors import DomainError, PrecisionError
from .exactcoeff import bernoulli_numbers, euler_secant_numbers, fn_numbers
from .precision import DEFAULT_PREC, real, working

__all__ = [
    "ThetaValue",
    "theta_series",
    "theta_reference",
    "log_gamma",
    "log_abs_gamma_series",
    "omega",
    "theta_series_correction_coeffs",
    "omega_coeffs",
]

T_MIN_SERIES = 10
MAX_SERIES_TERMS = 10


@dataclass
class ThetaValue:
    t: object
    theta: object
    route: str
    error_estimate: object


# ---------------------------------------------------------------------------
# Stirling-series log Gamma


@lru_cache(maxsize=32)
def _stirling_coeffs(prec, kmax):
    """B_2k / (2k(2k-1)) as mpf values at the given precision."""
    bern = bernoulli_numbers(kmax + 1)
    with working(prec):
        return tuple(mpf(bern[2 * k].numerator) / bern[2 * k].denominator
                     / ((2 * k) * (2 * k - 1)) for k in range(1, kmax + 1))


def _stirling_log_gamma(w):
    """Stirling series at a point with large |w|, Re w > 0."""
    eps = mpf(2) ** (-(mp.prec + 6))
    total = (w - mpf("0.5")) * log(w) - w + log(2 * pi) / 2
    w2 = w * w
    zpow = w
    kmax = max(24, mp.prec // 3)  # terms break out long before this
    coeffs = _stirling_coeffs(mp.prec, kmax)
    converged = False
    for k in range(1, kmax + 1):
        term = coeffs[k - 1] / zpow
        total += term
        # sqrt(2)^k inflation covers |arg w| up to pi/2
        if abs(term) * mpf(2) ** (k / 2 + 1) < eps * abs(total):
            converged = True
            break
        zpow *= w2
    if not converged:
        raise PrecisionError(f"Stirling series stalled at |w| = {abs(w)}")
    return total


def log_gamma(z, prec=DEFAULT_PREC):
    """Principal branch of log Gamma.

    Shift-and-Stirling: the argument is pushed right until Stirling
    converges at the working precision, then the shift comes back off as
    a sum of principal logs (exact for the principal branch away from the
    cut).  Never composes logs of Gamma values, so Im(log_gamma) is the
    honest unwrapped argument.
    """
    guard = 15
    with working(prec + guard):
        z = mpc(z) if not isinstance(z, (mpf, mpc)) else +z
        if isinstance(z, mpc) and z.imag == 0:
            z = z.real
        if not isinstance(z, mpc):
            if z <= 0 and z == int(z):
                raise DomainError(f"log_gamma pole at {z}")
            if z <= 0:
                # real reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
                mag = log(pi) - log(abs(sin(pi * z))) - log_gamma(1 - z, prec + guard).real
                negative = int(mp.floor(z)) % 2 != 0
                return mpc(mag, pi if negative else 0)
            z = mpc(z)
        # Stirling needs |w| large; shifting along the real axis, the
        # imaginary part already counts toward |w|
        shift_target = max(14, int(0.45 * (prec + guard)))
        n = 0
        if abs(z) < shift_target:
            im2 = z.imag * z.imag
            re_needed = (shift_target ** 2 - im2) ** mpf("0.5")
            n = int(re_needed - mp.floor(z.real)) + 1
        result = _stirling_log_gamma(z + n)
        for j in range(n):
            result -= log(z + j)
        return +result


# ---------------------------------------------------------------------------
# theta routes


def theta_reference(t, prec=DEFAULT_PREC):
    """theta via arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t."""
    guard = 20
    with working(prec + guard):
        t = real(t)
        if t <= 0:
            raise DomainError("theta_reference needs t > 0")
        lg = log_gamma(mpf("0.25") + t * mpc(0, "0.5"), prec + guard)
        theta = lg.imag - t / 2 * log(pi)
        return ThetaValue(t=t, theta=+theta, route="reference",
                          error_estimate=abs(theta) * mpf(2) ** (-prec))


def theta_series_correction_coeffs(terms):
    """Exact rational coefficients c_n with correction = sum c_n t^(1-2n).

    c_n = F_n / (8 n (2n-1) 2^(2n-1)); c_1 = 1/48, c_2 = 7/5760.
    """
    f = fn_numbers(terms)
    return [Fraction(f[n], 8 * n * (2 * n - 1) * 2 ** (2 * n - 1))
            for n in range(1, terms + 1)]


def theta_series(t, terms=4, prec=DEFAULT_PREC):
    """theta via the asymptotic series; error estimate is the first
    omitted term."""
    if not 1 <= terms <= MAX_SERIES_TERMS:
        raise DomainError(f"terms must lie in [1, {MAX_SERIES_TERMS}]")
    with working(prec + 20):
        t = real(t)
        if t < T_MIN_SERIES:
            raise DomainError(f"series route unreliable below t = {T_MIN_SERIES}")
        theta = t / 2 * log(t / (2 * pi)) - t / 2 - pi / 8
        for n, c in enumerate(theta_series_correction_coeffs(terms), start=1):
            theta += real(c) * t ** (1 - 2 * n)
        nxt = theta_series_correction_coeffs(terms + 1)[-1]
        err = abs(real(nxt) * t ** (-1 - 2 * terms))
        return ThetaValue(t=t, theta=+theta, route="series", error_estimate=err)


def log_abs_gamma_series(t, terms=4, prec=DEFAULT_PREC):
    """log|Gamma(1/4 + it/2)| by the E-number asymptotic series."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    with working(prec + 20):
        t = real(t)
        if t < T_MIN_SERIES:
            raise DomainError(f"series route unreliable below t = {T_MIN_SERIES}")
        e = euler_secant_numbers(terms)
        total = -pi / 4 * t - log(t / 2) / 4 + log(2 * pi) / 2
        for n in range(1, terms + 1):
            total += real(Fraction(e[n], 8 * n)) * (2 * t) ** (-2 * n)
        return +total


def omega_coeffs(terms):
    """Exact coefficients o_n with omega = sum o_n t^(-2n): 1/32, 5/256, ..."""
    e = euler_secant_numbers(terms)
    return [Fraction(e[n], 8 * n * 4 ** n) for n in range(1, terms + 1)]


def omega(t, terms=3, prec=DEFAULT_PREC):
    """The small log-magnitude defect omega(t), truncated E-number series."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    with working(prec + 20):
        t = real(t)
        if t < T_MIN_SERIES:
            raise DomainError(f"series route unreliable below t = {T_MIN_SERIES}")
        return +sum(real(c) * t ** (-2 * n)
                    for n, c in enumerate(omega_coeffs(terms), start=1))
