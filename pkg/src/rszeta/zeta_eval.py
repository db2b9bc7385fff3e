"""Critical-line and strip evaluation of zeta, plus an independent oracle.

The main-sum-plus-remainder route: Z(t) = 2 sum cos(theta - t log n)/sqrt(n)
over n <= m = floor(sqrt(t/2pi)), plus (-1)^(m-1) (t/2pi)^(-1/4) R with
R = sum C_k(delta) t^(-k/2); the C-tables come from the exact engine and
are contracted against circle-method derivatives of F at
delta = sqrt(t) - (m + 1/2) sqrt(2pi).

The strip route evaluates e^(i vartheta) zeta(s) for 0 <= Re s <= 1 with
the sigma-dependent A-tables and the unimodular phase factor, vartheta
continued off the line through log-gamma.

The oracle is a binomial-weighted acceleration of the alternating
eta series: with e_k = 1 for k <= n and
e_k = 2^-n sum_{j<=2n-k} C(n,j) for n < k <= 2n,

    eta(s) - sum_{k<=2n} (-1)^(k-1) e_k k^-s
        = (-1)^n 2^-n / Gamma(s) * int_0^oo x^(s-1) e^-(n+1)x
          (1-e^-x)^n / (1+e^-x) dx,

which is bounded by 8^-n (1 + |t|/sigma) e^(pi |t|/2) in absolute value
(the Gamma-ratio product bound); n is chosen from that a-priori bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from mpmath import cos, cos_sin, exp, floor, log, mpc, mpf, pi, sqrt

from .errors import DomainError, PrecisionError
from .exactcoeff import an_table, cn_table
from .precision import DEFAULT_PREC, ORACLE_PREC, as_fraction, pairwise_sum, real, working
from .psifun import f_derivatives
from .theta import log_gamma, theta_reference

__all__ = [
    "RSConfig",
    "RSBreakdown",
    "z_function",
    "zeta_critical",
    "zeta_strip",
    "oracle_zeta",
    "oracle_eta",
    "oracle_z",
    "vartheta_strip",
]

MAX_CORRECTION_TERMS = 5  # tables beyond C_4 are not pinned


@dataclass(frozen=True)
class RSConfig:
    correction_terms: int = 5
    precision_bits: int = DEFAULT_PREC
    boundary_rule: str = "floor"  # integer sqrt(t/2pi) rounds down

    def __post_init__(self):
        if not 0 <= self.correction_terms <= MAX_CORRECTION_TERMS:
            raise DomainError(
                f"correction_terms must lie in [0, {MAX_CORRECTION_TERMS}]")
        if self.precision_bits < 53:
            raise DomainError("precision_bits must be >= 53")


@dataclass
class RSBreakdown:
    t: object
    m: int
    delta: object
    theta: object
    main_sum: object
    remainder: object
    z: object
    error_estimate: object


def _combo_real(combo, derivs):
    """Contract a purely real derivative table against F-derivatives."""
    total = mpf(0)
    for k, c in sorted(combo.entries.items()):
        if not c.is_real:
            raise ValueError("expected a real coefficient table")
        total += real(c.re) * derivs.values[k]
    return total


def _combo_complex(combo, derivs):
    total = mpc(0)
    for k, c in sorted(combo.entries.items()):
        total += mpc(real(c.re), real(c.im)) * derivs.values[k]
    return total


def z_function(t, cfg: RSConfig = RSConfig()):
    """Riemann-Siegel Z(t) with a term-by-term breakdown.

    Real by construction: every ingredient (theta, cosines, the C-table
    contraction) is computed in real arithmetic.
    """
    prec = cfg.precision_bits
    nterms = cfg.correction_terms
    with working(prec + 30):
        t = real(t)
        eta = sqrt(t / (2 * pi))
        # tolerate boundary inputs formed at a lower working precision
        if eta < 1 - mpf("1e-9"):
            raise DomainError("z_function needs t >= 2 pi (so m >= 1)")
        m = max(1, int(floor(eta)))
        delta = sqrt(t) - (m + mpf("0.5")) * sqrt(2 * pi)
        theta = theta_reference(t, prec + 30).theta
        terms = [cos(theta - t * log(n)) / sqrt(n) for n in range(1, m + 1)]
        main_sum = 2 * pairwise_sum(terms)
        kmax = max(3 * nterms, 0)
        derivs = f_derivatives(delta, kmax, prec + 10)
        cvals = [_combo_real(cn_table(k), derivs) for k in range(nterms + 1)]
        remainder = mpf(0)
        for k in range(nterms):
            remainder += cvals[k] * t ** (-mpf(k) / 2)
        quarter = (t / (2 * pi)) ** (-mpf("0.25"))
        # first omitted term, plus an opposite-parity backstop: the tables
        # alternate between odd and even derivative orders, so C_K alone
        # underestimates the tail when delta sits near a parity zero
        omitted = abs(cvals[nterms]) * t ** (-mpf(nterms) / 2)
        if nterms >= 1:
            omitted += abs(cvals[nterms - 1]) * t ** (-mpf(nterms + 1) / 2)
        err = omitted * quarter
        z = main_sum + (-1) ** (m - 1) * quarter * remainder
        return RSBreakdown(t=t, m=m, delta=+delta, theta=+theta,
                           main_sum=+main_sum, remainder=+remainder,
                           z=+z, error_estimate=+err)


def zeta_critical(t, cfg: RSConfig = RSConfig()):
    """zeta(1/2 + it) = e^(-i theta) Z(t)."""
    br = z_function(t, cfg)
    with working(cfg.precision_bits + 30):
        c, s = cos_sin(-br.theta)
        return +(mpc(c, s) * br.z)


def vartheta_strip(s, prec=DEFAULT_PREC):
    """The phase angle continued off the critical line.

    -i [ (1/4 - s/2) log pi + (log Gamma(s/2) - log Gamma((1-s)/2))/2 ],
    which is analytic in the strip for t > 0 and vanishes at s = 1/2.
    """
    with working(prec + 20):
        s = mpc(s)
        val = (mpf("0.25") - s / 2) * log(pi) \
            + (log_gamma(s / 2, prec + 20) - log_gamma((1 - s) / 2, prec + 20)) / 2
        return +(mpc(0, -1) * val)


def zeta_strip(s, n_terms=5, prec=DEFAULT_PREC):
    """zeta(s) in the strip 0 <= Re s <= 1, Im s >= 2pi, via the
    sigma-dependent correction tables."""
    if not 0 <= n_terms <= MAX_CORRECTION_TERMS:
        raise DomainError(f"n_terms must lie in [0, {MAX_CORRECTION_TERMS}]")
    with working(prec + 40):
        s = mpc(s)
        sigma, t = s.real, s.imag
        if not (0 <= sigma <= 1):
            raise DomainError("supported strip is 0 <= Re s <= 1")
        eta = sqrt(t / (2 * pi)) if t > 0 else mpf(0)
        if eta < 1 - mpf("1e-9"):
            raise DomainError("zeta_strip needs Im s >= 2 pi")
        sig_frac = as_fraction(sigma)
        m = max(1, int(floor(eta)))
        tau = sqrt(t)
        delta = tau - (m + mpf("0.5")) * sqrt(2 * pi)
        vt = vartheta_strip(s, prec + 40)
        terms = [cos(vt + mpc(0, 1) * (s - mpf("0.5")) * log(l)) / sqrt(l)
                 for l in range(1, m + 1)]
        main = 2 * pairwise_sum(terms)
        kmax = max(3 * (n_terms - 1), 0)
        derivs = f_derivatives(delta, kmax, prec + 20)
        ssum = mpc(0)
        for k in range(n_terms):
            ssum += _combo_complex(an_table(k, sig_frac), derivs) * tau ** (-k)
        phase = exp(mpc(0, 1) * (t / 2 * log(t / (2 * pi))
                                 - t / 2 - pi / 8 - vt))
        rhs = main + (-1) ** (m - 1) * (t / (2 * pi)) ** ((sigma - 1) / 2) \
            * phase * ssum
        return +(exp(mpc(0, -1) * vt) * rhs)


# ---------------------------------------------------------------------------
# Oracle: binomial-accelerated eta series


ORACLE_TARGET = mpf("1e-21")


@lru_cache(maxsize=8)
def _binomial_weights(n):
    """Integer weights 2^n e_k for k = 1..2n (e_k = 1 below k = n)."""
    full = 2 ** n
    weights = [full] * n
    tail = full
    # e_{n+r} = 2^-n sum_{j=0}^{n-r} C(n,j): peel binomials off the top
    for r in range(1, n + 1):
        tail -= comb(n, n - r + 1)
        weights.append(tail)
    return weights


_LOG_CACHE: dict = {}


def _log_table(kmax, prec):
    key = prec
    logs = _LOG_CACHE.get(key)
    if logs is None or len(logs) < kmax + 1:
        with working(prec):
            logs = [mpf(0)] * (kmax + 1)
            for k in range(1, kmax + 1):
                logs[k] = log(mpf(k))
        _LOG_CACHE[key] = logs
    return logs


def _eta_term_count(s, target):
    """Smallest n with 8^-n (1+|t|/sigma) e^(pi|t|/2) below `target`."""
    sigma, t = s.real, abs(s.imag)
    ln_need = pi * t / 2 + log(1 + t / sigma) - log(target)
    return max(6, int(ln_need / log(mpf(8))) + 2)


def oracle_eta(s, prec=ORACLE_PREC, target=ORACLE_TARGET):
    """Dirichlet eta by the accelerated alternating series."""
    if prec < 160:
        raise PrecisionError("oracle paths need >= 160 bits")
    with working(prec + 20):
        s = mpc(s)
        sigma = s.real
        if sigma <= 0:
            raise DomainError("oracle needs Re s > 0")
        n = _eta_term_count(s, mpf(target))
        # round-off floor: ~2n unit-size terms at working precision
        if 2 * n * mpf(2) ** (-(prec + 20)) > mpf(target) / 10:
            raise PrecisionError(
                f"cannot reach the oracle target with {2 * n} terms at "
                f"{prec} bits")
        weights = _binomial_weights(n)
        logs = _log_table(2 * n, prec + 20)
        terms = []
        for k in range(1, 2 * n + 1):
            p = exp(-sigma * logs[k])
            c, sn = cos_sin(-s.imag * logs[k])
            term = weights[k - 1] * p * mpc(c, sn)
            terms.append(term if k % 2 else -term)
        total = pairwise_sum(terms)
        return +(total / mpf(2) ** n)


def oracle_zeta(s, prec=ORACLE_PREC):
    """Independent zeta reference: eta / (1 - 2^(1-s)).

    Absolute error below 1e-20 for Re s > 0, s != 1, by the a-priori
    bound of the acceleration scheme.
    """
    with working(prec + 20):
        s = mpc(s)
        if s == 1:
            raise DomainError("pole at s = 1")
        den = 1 - 2 ** (1 - s)
        if abs(den) < mpf("1e-8"):
            raise DomainError("too close to a zero of 1 - 2^(1-s)")
        # tighten the eta target so the quotient still meets the bound
        return +(oracle_eta(s, prec, target=ORACLE_TARGET * abs(den)) / den)


def oracle_z(t, prec=ORACLE_PREC):
    """Z(t) through the oracle: (value, self-check residual).

    value = Re(e^(i theta) zeta(1/2 + it)); the imaginary part of that
    product must vanish and is returned as the residual.
    """
    with working(prec + 20):
        t = real(t)
        theta = theta_reference(t, prec).theta
        c, s = cos_sin(theta)
        w = mpc(c, s) * oracle_zeta(mpc(mpf("0.5"), t), prec)
        return +w.real, +abs(w.imag)
