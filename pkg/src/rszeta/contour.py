"""Oscillatory-Gaussian line quadrature for the classical contour integrals.

All paths are straight lines of slope +-45 degrees crossing the real axis
strictly between 0 and 1, so the integrand's poles (the integers) are
never approached.  On each supported path the quadratic exponential decays
like exp(-pi v^2) in the path parameter, which makes the plain trapezoid
rule geometrically convergent; truncation at half_length is controlled by
an explicit bound folded into the reported error estimate.

Supported directions (unit complex):
    e^(3 pi i/4)  "up-left"    lower right -> upper left
    e^(-3 pi i/4) "down-left"  upper right -> lower left
    e^(-pi i/4)   "down-right" upper left  -> lower right
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

from mpmath import arg, cos, cos_sin, exp, expm1, log, mp, mpc, mpf, pi, sin, sqrt

from .errors import DomainError, TruncationWarning
from .precision import DEFAULT_PREC, pairwise_sum, real, working
from .theta import log_gamma
from .zeta_eval import oracle_zeta

__all__ = [
    "ContourSpec",
    "QuadratureResult",
    "UP_LEFT",
    "DOWN_LEFT",
    "DOWN_RIGHT",
    "phi_u",
    "phi_closed",
    "gauss_line_integral",
    "phi_tau_u",
    "moment_check",
    "f_s",
    "f_s_reflected",
    "functional_equation_check",
    "critical_line_identity",
    "f_asymptotic_leading",
    "g_s",
]

_H = 0.7071067811865476
UP_LEFT = complex(-_H, _H)
DOWN_LEFT = complex(-_H, -_H)
DOWN_RIGHT = complex(_H, -_H)

WARN_LEVEL = mpf("1e-10")


@dataclass(frozen=True)
class ContourSpec:
    crossing: float = 0.5
    direction: complex = UP_LEFT
    half_length: float = 6.0
    step: float = 0.05
    pole_guard: float = 0.25

    def __post_init__(self):
        if not 0 < self.crossing < 1:
            raise ValueError("crossing must lie strictly between 0 and 1")
        if self.step <= 0 or self.half_length <= 0:
            raise ValueError("step and half_length must be positive")
        _direction_signs(self.direction)  # validates


@dataclass
class QuadratureResult:
    value: object
    error_estimate: object


def _direction_signs(d):
    if abs(abs(d) - 1) > 1e-9:
        raise ValueError("direction must be a unit complex number")
    sr, si = (1 if d.real > 0 else -1), (1 if d.imag > 0 else -1)
    if abs(abs(d.real) - _H) > 1e-9 or (sr, si) not in [(-1, 1), (-1, -1), (1, -1)]:
        raise ValueError("direction must be one of the three supported rays")
    return sr, si


def _exact_direction(d):
    """The recognized direction as an exact-precision unit complex."""
    sr, si = _direction_signs(d)
    h = sqrt(mpf(2)) / 2
    return mpc(sr * h, si * h)


def _grid(spec):
    d = _exact_direction(spec.direction)
    c = mpf(spec.crossing)
    h = mpf(spec.step)
    n = int(mp.ceil(spec.half_length / h))
    xs = [c + d * (j * h) for j in range(-n, n + 1)]
    # pole guard: points near the real axis keep clear of the integers
    guard = mpf(spec.pole_guard) * abs(d.imag)
    for x in xs:
        if abs(x.imag) >= guard:
            continue
        dist = abs(x - mp.nint(x.real))
        if dist < guard:
            raise ValueError(f"grid point {x} within {dist} of an integer pole")
    return d, c, h, xs


def _line_quadrature(f, spec, trunc_log):
    """Trapezoid sum along the line; error from step-halving plus the
    explicit truncation bound (whose log is supplied by the caller)."""
    d, c, h, xs = _grid(spec)
    vals = [f(x) for x in xs]
    total = pairwise_sum(vals)
    coarse = pairwise_sum(vals[0::2])
    fine_val = d * h * total
    coarse_val = d * (2 * h) * coarse
    trunc = exp(mpf(trunc_log)) if trunc_log > -4000 else mpf(0)
    if trunc > WARN_LEVEL:
        warnings.warn(
            f"truncation bound {float(trunc):.2e} above {float(WARN_LEVEL):.0e}; "
            f"extend half_length", TruncationWarning)
    err = abs(fine_val - coarse_val) + trunc
    return QuadratureResult(value=fine_val, error_estimate=err)


def _inv_two_i_sin_pi(x):
    return 1 / (2 * mpc(0, 1) * sin(pi * x))


def phi_u(u, spec: ContourSpec = ContourSpec(), prec=DEFAULT_PREC):
    """The lattice-Gaussian integral of e^(-pi i x^2 + 2 pi i u x) over
    the up-left line, divided by e^(pi i x) - e^(-pi i x)."""
    _require_direction(spec, UP_LEFT)
    with working(prec + 30):
        u = mpc(u)
        length = mpf(spec.half_length)
        trunc_log = -pi * length ** 2 + 2 * pi * abs(u) * length

        def f(x):
            return exp(-pi * mpc(0, 1) * x * x + 2 * pi * mpc(0, 1) * u * x) \
                * _inv_two_i_sin_pi(x)

        return _line_quadrature(f, spec, trunc_log)


def phi_tau_u(tau, u, spec: ContourSpec = ContourSpec(), prec=DEFAULT_PREC):
    """Quadratic-exponent generalisation; needs Re tau < 0 for Gaussian
    decay on the up-left line.  phi_tau_u(-1, u) reduces to phi_u(u)."""
    _require_direction(spec, UP_LEFT)
    with working(prec + 30):
        tau = mpc(tau)
        u = mpc(u)
        if tau.real >= 0:
            raise DomainError("phi_tau_u needs Re tau < 0")
        length = mpf(spec.half_length)
        trunc_log = tau.real * pi * length ** 2 + 2 * pi * abs(u) * length

        def f(x):
            return exp(pi * mpc(0, 1) * tau * x * x
                       + 2 * pi * mpc(0, 1) * u * x) * _inv_two_i_sin_pi(x)

        return _line_quadrature(f, spec, trunc_log)


def gauss_line_integral(spec: ContourSpec = ContourSpec(), prec=DEFAULT_PREC):
    """Pure Gaussian along the up-left line; the exact value is
    e^(3 pi i/4)."""
    _require_direction(spec, UP_LEFT)
    with working(prec + 30):
        length = mpf(spec.half_length)

        def f(x):
            return exp(-pi * mpc(0, 1) * x * x)

        return _line_quadrature(f, spec, -pi * length ** 2)


def _require_direction(spec, wanted):
    if _direction_signs(spec.direction) != _direction_signs(wanted):
        raise ValueError("spec carries the wrong path direction for this "
                         "operation")


def phi_closed(u, prec=DEFAULT_PREC):
    """Entire closed form 1/(1-e^(-2 pi i u)) - e^(pi i u^2)/(e^(pi i u)-e^(-pi i u)).

    Each term has simple poles at the integers which cancel in the sum;
    within 0.05 of an integer the sum is rearranged into the manifestly
    pole-free local form

        -e^(pi i eps) * expm1(w)/w * (2n-1+eps)/2 / sinc(pi eps),

    with eps = u - n and w = pi i eps (2n - 1 + eps).
    """
    with working(prec + 25):
        u = mpc(u)
        n = int(mp.nint(u.real))
        eps = u - n
        if abs(eps) >= mpf("0.05"):
            term1 = 1 / (1 - exp(-2 * pi * mpc(0, 1) * u))
            term2 = exp(pi * mpc(0, 1) * u * u) \
                / (exp(pi * mpc(0, 1) * u) - exp(-pi * mpc(0, 1) * u))
            return +(term1 - term2)
        w = pi * mpc(0, 1) * eps * (2 * n - 1 + eps)
        ew = expm1(w) / w if w != 0 else mpf(1)
        snc = sin(pi * eps) / (pi * eps) if eps != 0 else mpf(1)
        return +(-exp(pi * mpc(0, 1) * eps) * ew * (2 * n - 1 + eps) / 2 / snc)


def _cauchy_derivative(fn, center, order, radius, points, prec):
    """order-th derivative through the Cauchy circle trapezoid."""
    with working(prec + 30 + 2 * order):
        r = mpf(radius)
        roots = [mpc(*cos_sin(2 * pi * j / points)) for j in range(points)]
        samples = [fn(center + r * w) for w in roots]
        acc = mpc(0)
        for j, fj in enumerate(samples):
            acc += fj * roots[(-j * order) % points]
        fact = mpf(1)
        for k in range(2, order + 1):
            fact *= k
        return fact / r ** order * acc / points


def moment_check(n, u, spec: ContourSpec = ContourSpec(), prec=DEFAULT_PREC):
    """Weighted-moment identity: the x^n-weighted quadrature against the
    n-th u-derivative of the closed form, scaled by (2 pi i)^-n.

    Returns (quadrature side, derivative side).
    """
    if not 0 <= n <= 4:
        raise DomainError("moment order must lie in [0, 4]")
    _require_direction(spec, UP_LEFT)
    with working(prec + 30):
        u = mpc(u)
        length = mpf(spec.half_length)
        trunc_log = -pi * length ** 2 + 2 * pi * abs(u) * length \
            + n * log(1 + length)

        def f(x):
            return exp(-pi * mpc(0, 1) * x * x + 2 * pi * mpc(0, 1) * u * x) \
                * x ** n * _inv_two_i_sin_pi(x)

        left = _line_quadrature(f, spec, trunc_log).value
        deriv = _cauchy_derivative(lambda z: phi_closed(z, prec + 20),
                                   u, n, mpf("0.25"), 64, prec)
        right = deriv / (2 * pi * mpc(0, 1)) ** n
        return +left, +right


# ---------------------------------------------------------------------------
# The integral representation


def _auto_length(spec, sigma, t):
    needed = 6 + 0.2 * abs(float(sigma)) + 0.5 * float(t) ** 0.5
    if spec.half_length >= needed:
        return spec
    return replace(spec, half_length=needed)


def _path_logs(xs, center_index):
    """Continuously tracked log along the grid, real at the crossing."""
    logs = [None] * len(xs)
    theta = mpf(0)
    logs[center_index] = log(abs(xs[center_index])) + mpc(0, theta)
    for j in range(center_index + 1, len(xs)):
        theta += arg(xs[j] / xs[j - 1])
        logs[j] = log(abs(xs[j])) + mpc(0, theta)
    theta = mpf(0)
    for j in range(center_index - 1, -1, -1):
        theta -= arg(xs[j + 1] / xs[j])
        logs[j] = log(abs(xs[j])) + mpc(0, theta)
    return logs


def _power_line_quadrature(s_exponent, gauss_sign, spec, prec):
    """Shared engine for x^(exponent) e^(+-pi i x^2)/(2i sin pi x)."""
    with working(prec + 40):
        d, c, h, xs = _grid(spec)
        length = mpf(spec.half_length)
        center = len(xs) // 2
        logs = _path_logs(xs, center)
        vals = []
        for x, lx in zip(xs, logs):
            vals.append(exp(s_exponent * lx
                            + gauss_sign * pi * mpc(0, 1) * x * x)
                        * _inv_two_i_sin_pi(x))
        total = pairwise_sum(vals)
        coarse = pairwise_sum(vals[0::2])
        fine_val = d * h * total
        coarse_val = d * (2 * h) * coarse
        sig = abs(s_exponent.real)
        t_im = abs(s_exponent.imag)
        trunc_log = -pi * length ** 2 + 3 * pi / 4 * t_im \
            + sig * log(1 + length)
        trunc = exp(trunc_log) if trunc_log > -4000 else mpf(0)
        if trunc > WARN_LEVEL:
            warnings.warn(f"truncation bound {float(trunc):.2e} above target",
                          TruncationWarning)
        return QuadratureResult(value=fine_val,
                                error_estimate=abs(fine_val - coarse_val) + trunc)


def f_s(s, spec: ContourSpec | None = None, prec=DEFAULT_PREC):
    """The entire transcendent: x^-s e^(pi i x^2)/(e^(pi i x)-e^(-pi i x))
    integrated along the down-left line, branch of x^-s real at the
    crossing and continued along the path."""
    with working(prec + 40):
        s = mpc(s)
        if abs(s.imag) > 100:
            raise DomainError("quadrature budget capped at |Im s| = 100")
        base = spec or ContourSpec(direction=DOWN_LEFT)
        _require_direction(base, DOWN_LEFT)
        base = _auto_length(base, s.real, abs(s.imag))
        return _power_line_quadrature(-s, +1, base, prec)


def f_s_reflected(s, spec: ContourSpec | None = None, prec=DEFAULT_PREC):
    """Companion integral x^(s-1) e^(-pi i x^2)/(e^(pi i x)-e^(-pi i x))
    along the down-right line."""
    with working(prec + 40):
        s = mpc(s)
        if abs(s.imag) > 100:
            raise DomainError("quadrature budget capped at |Im s| = 100")
        base = spec or ContourSpec(direction=DOWN_RIGHT)
        _require_direction(base, DOWN_RIGHT)
        base = _auto_length(base, abs(s.real) + 1, abs(s.imag))
        return _power_line_quadrature(s - 1, -1, base, prec)


def _zeta_one_minus(s, prec):
    """zeta(1-s) through the oracle, reflected when Re(1-s) <= 0."""
    one_minus = 1 - s
    if one_minus.real > mpf("0.05"):
        return oracle_zeta(one_minus, max(prec, 160))
    # pi^(-s/2) Gamma(s/2) zeta(s) = pi^(-(1-s)/2) Gamma((1-s)/2) zeta(1-s)
    zs = oracle_zeta(s, max(prec, 160))
    lg = log_gamma(s / 2, prec) - log_gamma(one_minus / 2, prec)
    return exp((one_minus / 2 - s / 2) * log(pi) + lg) * zs


def functional_equation_check(s, prec=200):
    """Residual of the two-integral representation of the completed zeta.

    |pi^(-(1-s)/2) Gamma((1-s)/2) zeta(1-s)
        - pi^(-s/2) Gamma(s/2) f_s(s)
        - pi^(-(1-s)/2) Gamma((1-s)/2) f_s_reflected(s)|
    with zeta from the oracle and Gamma from log_gamma.
    """
    with working(prec + 40):
        s = mpc(s)
        if abs(s.real) > 6 or not 2 <= s.imag <= 100:
            raise DomainError("supported window is |Re s| <= 6, 2 <= Im s <= 100")
        ga_s = exp(log_gamma(s / 2, prec))
        ga_1ms = exp(log_gamma((1 - s) / 2, prec))
        lhs = pi ** (-(1 - s) / 2) * ga_1ms * _zeta_one_minus(s, prec)
        rhs = pi ** (-s / 2) * ga_s * f_s(s, prec=prec).value \
            + pi ** (-(1 - s) / 2) * ga_1ms * f_s_reflected(s, prec=prec).value
        return +abs(lhs - rhs)


def critical_line_identity(t, prec=200):
    """On the critical line the completed zeta equals the real part of
    2 pi^(-s/2) Gamma(s/2) f_s(s); returns the residual."""
    with working(prec + 40):
        t = real(t)
        if not 2 <= t <= 100:
            raise DomainError("supported window is 2 <= t <= 100")
        s = mpc(mpf("0.5"), t)
        pref = pi ** (-s / 2) * exp(log_gamma(s / 2, prec))
        lhs = (2 * pref * f_s(s, prec=prec).value).real
        rhs = (pref * oracle_zeta(s, max(prec, 160))).real
        return +abs(lhs - rhs)


def f_asymptotic_leading(s, prec=200):
    """Quadrature value against the closed leading term, for deep
    left-half-plane arguments (Im s > 0, -Re s >= (Im s)^(3/7)).

    Returns (quadrature, leading-term) as a pair.
    """
    with working(prec + 40):
        s = mpc(s)
        t = s.imag
        if t <= 0 or -s.real < t ** (mpf(3) / 7):
            raise DomainError("needs Im s > 0 and -Re s >= (Im s)^(3/7)")
        quad = f_s(s, prec=prec).value
        eta = sqrt((s - 1) / (2 * pi * mpc(0, 1)))
        if not 0 < arg(eta) < pi / 4:
            raise DomainError("branch violation: arg eta outside (0, pi/4)")
        lead = exp(pi * mpc(0, 1) / 4 * (s - mpf("3.5"))) \
            * pi ** ((s - 1) / 2) * sin(pi * s / 2) \
            * exp(log_gamma((1 - s) / 2, prec)) \
            * sin(pi * eta) / cos(2 * pi * eta)
        return +quad, +lead


def g_s(s, spec: ContourSpec | None = None, prec=DEFAULT_PREC):
    """Zero-preserving normalisation of f_s: the prefactor
    pi^(-(s+1)/2) e^(-pi i s/4) Gamma((s+1)/2) never vanishes."""
    with working(prec + 40):
        s = mpc(s)
        base = f_s(s, spec=spec, prec=prec)
        pref = pi ** (-(s + 1) / 2) * exp(-pi * mpc(0, 1) * s / 4) \
            * exp(log_gamma((s + 1) / 2, prec))
        return QuadratureResult(value=+(pref * base.value),
                                error_estimate=+(abs(pref) * base.error_estimate))
