"""The entire function F(u) = cos(u^2 + 3pi/8)/cos(sqrt(2pi) u).

Both cosines vanish to first order at the real points
u0 = (k + 1/2) sqrt(pi/2), so the quotient extends to an entire function.
Near those points the quotient is evaluated through the local expansions
of numerator and denominator about u0; with cos(u0^2+3pi/8) = 0 and
cos(sqrt(2pi) u0) = 0 the two expansions sum to

    F(u0 + h) = sign * sin(h(2 u0 + h)) / sin(sqrt(2pi) h),

an exact rearrangement evaluated through stable sinc ratios.

Derivatives come from the Cauchy integral formula on a circle around the
center, discretised by the M-point periodic trapezoid rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import cos, cos_sin, mp, mpc, mpf, pi, sin, sqrt
from mpmath.libmp import fzero, mpc_add, mpc_mul

from .errors import ConvergenceError
from .precision import DEFAULT_PREC, working

__all__ = ["FDerivatives", "f_value", "f_derivatives"]

SWITCH_THRESHOLD = 0.05   # |cos(sqrt(2pi) u)| below this uses the local form
DEFAULT_RADIUS = mpf("0.3")
DEFAULT_POINTS = 128
MAX_ORDER = 16


@dataclass
class FDerivatives:
    center: object
    values: list            # index k holds F^(k)(center)
    error_estimate: object


def _sinc(z):
    if z == 0:
        return mpf(1)
    return sin(z) / z


@lru_cache(maxsize=32)
def _constants(prec):
    with working(prec):
        return sqrt(2 * pi), 3 * pi / 8, sqrt(pi / 2)


def _f_raw(u, threshold=SWITCH_THRESHOLD):
    """F at a real or complex point, local form near denominator zeros."""
    s2pi, c38, half_step = _constants(mp.prec)
    den = cos(s2pi * u)
    if abs(den) >= threshold:
        return cos(u * u + c38) / den
    # nearest real zero of the denominator: u0 = (k + 1/2) sqrt(pi/2)
    k = int(mp.floor(u.real / half_step))
    u0 = (k + mpf("0.5")) * half_step
    h = u - u0
    # sin(sqrt(2pi) u0) = (-1)^k, sin(u0^2 + 3pi/8) = (-1)^((k^2+k)/2)
    sign = (-1) ** (k + (k * k + k) // 2)
    a = h * (2 * u0 + h)
    b = s2pi * h
    return sign * ((2 * u0 + h) / s2pi) * (_sinc(a) / _sinc(b))


def f_value(u, prec=DEFAULT_PREC, threshold=SWITCH_THRESHOLD):
    """Value of the entire extension at a finite real point."""
    with working(prec + 10):
        return +_f_raw(mpf(str(u)) if isinstance(u, str) else mpf(u), threshold)


@lru_cache(maxsize=None)
def _unit_roots(m, prec):
    with working(prec):
        return tuple(mpc(*cos_sin(2 * pi * j / m)) for j in range(m))


def _circle_samples(u, r, m, prec):
    roots = _unit_roots(m, prec)
    return [_f_raw(u + r * w) for w in roots]


def _dft_derivatives(samples, r, kmax):
    """k! r^-k (1/M) sum_j f_j e^{-2pi i jk/M} for k = 0..kmax.

    The accumulation runs on raw mantissa tuples; this inner product is
    the hot loop of every critical-line evaluation.
    """
    m = len(samples)
    wp = mp.prec + 10
    roots = _unit_roots(m, mp.prec)
    raw_roots = [w._mpc_ for w in roots]
    raws = [x._mpc_ if isinstance(x, mpc) else (x._mpf_, fzero)
            for x in samples]
    out = []
    fact = mpf(1)
    rk = mpf(1)
    for k in range(kmax + 1):
        if k:
            fact *= k
            rk *= r
        acc = (fzero, fzero)
        if k == 0:
            for rv in raws:
                acc = mpc_add(acc, rv, wp, "n")
        else:
            for j, rv in enumerate(raws):
                acc = mpc_add(acc, mpc_mul(rv, raw_roots[(-j * k) % m],
                                           wp, "n"), wp, "n")
        out.append(fact / rk * mp.make_mpc(acc) / m)
    return out


def f_derivatives(u, kmax, prec=DEFAULT_PREC, radius=DEFAULT_RADIUS,
                  points=DEFAULT_POINTS):
    """F and its derivatives up to order kmax at a real center.

    Cauchy circle of radius `radius` sampled at `points` nodes; doubling
    the node count once supplies the error estimate.  Raises
    ConvergenceError when doubling moves any order by more than 1e-8
    relative (scale floored at 1 for near-zero orders).
    """
    if not 0 <= kmax <= MAX_ORDER:
        raise ValueError(f"kmax must lie in [0, {MAX_ORDER}]")
    boost = 26 + int(kmax * 1.2)
    with working(prec + boost):
        r = mpf(radius)
        center = mpf(u)
        fine = _circle_samples(center, r, 2 * points, mp.prec)
        coarse = fine[0::2]  # the halved circle is the even subset
        v_coarse = _dft_derivatives(coarse, r, kmax)
        v_fine = _dft_derivatives(fine, r, kmax)
        err = mpf(0)
        for k, (vc, vf) in enumerate(zip(v_coarse, v_fine)):
            delta = abs(vc - vf)
            err = max(err, delta)
            if delta > mpf("1e-8") * max(abs(vf), mpf(1)):
                raise ConvergenceError(
                    f"circle-doubling moved the order-{k} derivative by {delta}")
        values = [vf.real for vf in v_fine]
    return FDerivatives(center=center, values=values, error_estimate=err)
