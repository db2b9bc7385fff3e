"""Exact-rational engine for the correction-series coefficient tables.

Everything in this module is integer and Fraction arithmetic.  No float
enters or leaves; consumers convert at whatever precision they run at.

Tables provided:

* B-series: truncated Laurent series in a formal variable x whose
  polynomial parts carry the correction coefficients,
* A-tables: derivative combinations ``sum_k c_k F^(k)(delta)`` ordered by
  powers of 1/tau (tau = sqrt(t)), valid in a whole vertical strip,
* C-tables: the critical-line specialisation, ordered by powers of
  t^(-1/2) after folding in the phase series built from the F-numbers,
* D-series: the same remainder reordered by derivative order of F, each
  coefficient an asymptotic series in 1/tau built from the E-numbers,
* E/F-numbers (secant and inverse-sinc expansions) and Bernoulli numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "GaussianRational",
    "FormalSeries",
    "DerivativeCombo",
    "VAR_X",
    "VAR_TAU_INV",
    "VAR_T_INV",
    "bn_series",
    "an_table",
    "cn_table",
    "ak_saddle_coeffs",
    "euler_secant_numbers",
    "fn_numbers",
    "bernoulli_numbers",
    "dn_series",
    "phase_series",
    "bkl_crosscheck",
    "format_record",
]

VAR_X = "x"
VAR_TAU_INV = "tau_inv"
VAR_T_INV = "t_inv"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v)!r}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex scalar with rational real and imaginary parts."""

    re: Fraction = _ZERO
    im: Fraction = _ZERO

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(_frac(re), _frac(im))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        o = _frac(other)
        return GaussianRational(self.re * o, self.im * o)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.re})+({self.im})i"


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational.of(1)
GR_I = GaussianRational.of(0, 1)


@dataclass(frozen=True)
class FormalSeries:
    """Finite Laurent series with exact coefficients.

    ``terms`` maps exponent -> nonzero GaussianRational.  Exponents inside
    [low_cutoff, high_cutoff] that are absent are exactly zero; exponents
    below low_cutoff were truncated away and are unknown.
    """

    variable: str
    terms: dict = field(default_factory=dict)
    low_cutoff: int = 0
    high_cutoff: int = 0

    def __post_init__(self):
        for e in self.terms:
            if not (self.low_cutoff <= e <= self.high_cutoff):
                raise ValueError(f"exponent {e} outside window "
                                 f"[{self.low_cutoff}, {self.high_cutoff}]")

    def coeff(self, e: int) -> GaussianRational:
        if e < self.low_cutoff:
            raise ValueError(f"exponent {e} below truncation cutoff {self.low_cutoff}")
        return self.terms.get(e, GR_ZERO)

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        assert self.variable == other.variable
        lo = max(self.low_cutoff, other.low_cutoff)
        hi = max(self.high_cutoff, other.high_cutoff)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, GR_ZERO) + c
            if s.is_zero:
                out.pop(e, None)
            else:
                out[e] = s
        out = {e: c for e, c in out.items() if e >= lo}
        return FormalSeries(self.variable, out, lo, hi)

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        assert self.variable == other.variable
        # a coefficient of the product is exact only if no contribution
        # involves a truncated-away term of either factor
        lo = max(self.low_cutoff + other.high_cutoff,
                 other.low_cutoff + self.high_cutoff)
        hi = self.high_cutoff + other.high_cutoff
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e < lo:
                    continue
                s = out.get(e, GR_ZERO) + c1 * c2
                if s.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return FormalSeries(self.variable, out, lo, hi)

    def scale(self, c) -> "FormalSeries":
        if not isinstance(c, GaussianRational):
            c = GaussianRational.of(c)
        if c.is_zero:
            return FormalSeries(self.variable, {}, self.low_cutoff, self.high_cutoff)
        return FormalSeries(self.variable,
                            {e: v * c for e, v in self.terms.items()},
                            self.low_cutoff, self.high_cutoff)

    def shift(self, j: int) -> "FormalSeries":
        """Multiply by variable**j."""
        return FormalSeries(self.variable,
                            {e + j: c for e, c in self.terms.items()},
                            self.low_cutoff + j, self.high_cutoff + j)

    def window(self, lo: int, hi: int) -> "FormalSeries":
        if lo < self.low_cutoff:
            raise ValueError("cannot widen a truncated series")
        return FormalSeries(self.variable,
                            {e: c for e, c in self.terms.items() if lo <= e <= hi},
                            lo, hi)

    @property
    def exponents(self):
        return sorted(self.terms)

    def min_exponent(self):
        return min(self.terms) if self.terms else None

    def max_exponent(self):
        return max(self.terms) if self.terms else None


def series_exp(q: FormalSeries) -> FormalSeries:
    """exp of a series with no constant term and only negative exponents.

    Purely formal: the partial sums of q**j/j! terminate once the top
    exponent of q**j falls below the truncation window.
    """
    if q.max_exponent() is not None and q.max_exponent() >= 0:
        raise ValueError("series_exp expects strictly negative exponents")
    one = FormalSeries(q.variable, {0: GR_ONE}, q.low_cutoff, 0)
    result = one
    power = one
    j = 0
    top = q.max_exponent()
    if top is None:
        return result
    fact = 1
    while (j + 1) * top >= q.low_cutoff:
        j += 1
        fact *= j
        power = power * q
        result = result + power.scale(Fraction(1, fact))
    return FormalSeries(q.variable, result.terms, q.low_cutoff, 0)


# ---------------------------------------------------------------------------
# B-series and the A/C derivative tables


def _b_recursion_step(a: dict, sigma: Fraction, lo: int, hi: int) -> dict:
    """One step of the coefficient recursion for the B-series."""
    lead = GR_I * ((1 - 2 * sigma) / 4)
    out: dict = {}
    for k in range(lo, hi + 1):
        c = GR_ZERO
        if not lead.is_zero:
            c = c + lead * a.get(k - 1, GR_ZERO)
        c = c - a.get(k + 1, GR_ZERO) * Fraction(1, 2)
        c = c - a.get(k - 3, GR_ZERO) * Fraction((k - 1) * (k - 2), 8)
        if not c.is_zero:
            out[k] = c
    return out


def bn_series(n: int, sigma) -> FormalSeries:
    """n-th B-series as a truncated Laurent series in x.

    Starts from B_0 = exp(i x^-2) (coefficient i^k/k! at x^(-2k)) and
    iterates
        a_k' = i(1-2*sigma)/4 * a_{k-1} - 1/2 * a_{k+1}
               - (k-1)(k-2)/8 * a_{k-3}.
    The truncated low end contaminates at most three exponents upward per
    step (through the a_{k-3} term), so the internal cutoff sits 3n+2 below
    the returned window; every returned coefficient is exact.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    sigma = _frac(sigma)
    guard = n + 2
    ret_lo, ret_hi = -2 * guard, 3 * n
    work_lo = ret_lo - 3 * n - 2
    # B_0 coefficients: i^k / k! at exponent -2k
    ik = [GR_ONE, GR_I, -GR_ONE, -GR_I]
    a: dict = {}
    fact = 1
    k = 0
    while -2 * k >= work_lo:
        a[-2 * k] = ik[k % 4] * Fraction(1, fact)
        k += 1
        fact *= k
    exact_lo = work_lo
    for step in range(n):
        a = _b_recursion_step(a, sigma, work_lo, 3 * (step + 1))
        exact_lo += 3
        a = {e: c for e, c in a.items() if e >= exact_lo}
        work_lo = exact_lo
    assert exact_lo <= ret_lo
    return FormalSeries(VAR_X, {e: c for e, c in a.items() if ret_lo <= e <= ret_hi},
                        ret_lo, ret_hi)


@dataclass(frozen=True)
class DerivativeCombo:
    """Exact linear combination sum_k entries[k] * F^(k)(delta)."""

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for k, c in self.entries.items():
            if k < 0:
                raise ValueError("derivative orders must be >= 0")
            if c.is_zero:
                raise ValueError("zero coefficients must be dropped")

    @property
    def max_order(self) -> int:
        return max(self.entries) if self.entries else 0

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.entries.values())

    def orders(self):
        return sorted(self.entries)


@lru_cache(maxsize=None)
def _an_table_cached(n: int, sigma: Fraction) -> DerivativeCombo:
    b = bn_series(n, sigma)
    fact = 1
    entries = {}
    for k in range(0, 3 * n + 1):
        if k:
            fact *= k
        c = b.coeff(k)
        if not c.is_zero:
            entries[k] = c * Fraction(1, fact)
    return DerivativeCombo(entries)


def an_table(n: int, sigma) -> DerivativeCombo:
    """Strip-form correction table: coefficient of tau^-n, keyed by
    derivative order of F."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _an_table_cached(n, _frac(sigma))


def phase_series(order: int) -> FormalSeries:
    """The unimodular phase factor relating the strip tables to the
    critical-line tables, as an exact series in 1/tau down to tau^-order.

    exp(-(i/8) * sum_k F_k/(k(2k-1)) * (2t)^(1-2k)) with t = tau^2; the
    exponent carries only exponents 2-4k, so the result is even in 1/tau.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    kmax = (order + 2) // 4 + 1
    f = fn_numbers(kmax)
    q_terms = {}
    for k in range(1, kmax + 1):
        e = 2 - 4 * k
        if e < -order:
            break
        coeff = -Fraction(f[k], 8 * k * (2 * k - 1)) * Fraction(1, 2 ** (2 * k - 1))
        q_terms[e] = GR_I * coeff
    if not q_terms:
        return FormalSeries(VAR_TAU_INV, {0: GR_ONE}, -order, 0)
    q = FormalSeries(VAR_TAU_INV, q_terms, -order - 4, -2)
    return series_exp(q).window(-order, 0)


@lru_cache(maxsize=None)
def cn_table(n: int) -> DerivativeCombo:
    """Critical-line correction table: coefficient of t^(-n/2), keyed by
    derivative order of F.

    Collects the tau^-n coefficient of (sum_m A_m tau^-m) * phase_series;
    the imaginary entries of the A-tables cancel against the phase, so
    these come out purely real (checked by the test suite up to n = 8).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    phase = phase_series(n)
    acc: dict = {}
    for m in range(0, n + 1):
        p = phase.coeff(-(n - m))
        if p.is_zero:
            continue
        for k, c in an_table(m, Fraction(1, 2)).entries.items():
            s = acc.get(k, GR_ZERO) + c * p
            if s.is_zero:
                acc.pop(k, None)
            else:
                acc[k] = s
    return DerivativeCombo(acc)


# ---------------------------------------------------------------------------
# Saddle-coefficient polynomials


def ak_saddle_coeffs(n_max: int, sigma) -> list:
    """Saddle-expansion coefficients a_0..a_n_max as exact polynomials in
    1/tau, from (n+1) tau a_{n+1} = -(n+1-sigma) a_n + i a_{n-2}."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    sigma = _frac(sigma)
    coeffs = [FormalSeries(VAR_TAU_INV, {0: GR_ONE}, -(n_max + 1), 0)]
    for n in range(0, n_max):
        prev = coeffs[n]
        prev2 = coeffs[n - 2] if n >= 2 else None
        term = prev.scale(-(Fraction(n + 1) - sigma) / (n + 1))
        if prev2 is not None:
            term = term + prev2.scale(GR_I * Fraction(1, n + 1))
        coeffs.append(term.shift(-1))
    lo = -(n_max + 1)
    return [FormalSeries(VAR_TAU_INV, c.terms, lo, 0) for c in coeffs]


# ---------------------------------------------------------------------------
# E, F and Bernoulli numbers


@lru_cache(maxsize=None)
def euler_secant_numbers(N: int) -> tuple:
    """E_0..E_N from the secant-series recurrence
    E_n - C(2n,2) E_{n-1} + C(2n,4) E_{n-2} - ... + (-1)^n E_0 = 0."""
    if N < 0:
        raise ValueError("N must be >= 0")
    e = [Fraction(1)]
    for n in range(1, N + 1):
        s = _ZERO
        for j in range(1, n + 1):
            s += (-1) ** (j - 1) * comb(2 * n, 2 * j) * e[n - j]
        e.append(s)
    return tuple(e)


@lru_cache(maxsize=None)
def fn_numbers(N: int) -> tuple:
    """F_0..F_N from the inverse-sinc recurrence
    C(2n+1,1) F_n - C(2n+1,3) F_{n-1} + ... + (-1)^n F_0 = 0."""
    if N < 0:
        raise ValueError("N must be >= 0")
    f = [Fraction(1)]
    for n in range(1, N + 1):
        s = _ZERO
        for j in range(1, n + 1):
            s += (-1) ** (j - 1) * comb(2 * n + 1, 2 * j + 1) * f[n - j]
        f.append(s / comb(2 * n + 1, 1))
    return tuple(f)


@lru_cache(maxsize=None)
def bernoulli_numbers(N: int) -> tuple:
    """B_0..B_{2N} via sum_j C(m+1, j) B_j = 0 (so B_1 = -1/2)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    b = [Fraction(1)]
    for m in range(1, 2 * N + 1):
        s = _ZERO
        for j in range(0, m):
            s += comb(m + 1, j) * b[j]
        b.append(-s / (m + 1))
    return tuple(b)


# ---------------------------------------------------------------------------
# D-series


def _omega_series(low: int) -> FormalSeries:
    """omega = (1/8) sum_k E_k/k (2t)^(-2k) as a series in 1/tau (t = tau^2),
    exact down to exponent `low`."""
    kmax = (-low) // 4 + 1
    e = euler_secant_numbers(kmax)
    terms = {}
    for k in range(1, kmax + 1):
        exp = -4 * k
        if exp < low:
            break
        terms[exp] = GaussianRational.of(Fraction(e[k], 8 * k * 4 ** k))
    return FormalSeries(VAR_TAU_INV, terms, low, -4 if terms else 0)


@lru_cache(maxsize=None)
def _dn_internal(n: int, low: int) -> FormalSeries:
    if n == 0:
        om = _omega_series(low)
        return series_exp(om) if om.terms else FormalSeries(VAR_TAU_INV, {0: GR_ONE}, low, 0)
    if n == 1:
        om = _omega_series(low - 2)
        diff = series_exp(om) + series_exp(om.scale(-1)).scale(-1)
        return diff.shift(1).scale(-1).window(low, 0)
    prev = _dn_internal(n - 1, low - 2)
    out = prev.shift(1).scale(-Fraction(2, n))
    m = n - 1  # recursion index
    if m >= 3:
        out = out + _dn_internal(n - 4, low).scale(-Fraction(1, 4 * m * (m + 1)))
    return out.window(low, 0)


def dn_series(n: int, order: int) -> FormalSeries:
    """Asymptotic expansion of the n-th derivative-ordered coefficient as a
    series in 1/tau, truncated at tau^-order.

    D_0 = exp(omega); D_1 = -tau (exp(omega) - exp(-omega)); afterwards
    D_{n+1} = -2 tau D_n/(n+1) - D_{n-3}/(4n(n+1)).  All exponents present
    are congruent to n mod 4.  Coefficients beyond the classically printed
    leading terms are extrapolations of the same recursion.
    """
    if n < 0 or order < 0:
        raise ValueError("n and order must be >= 0")
    low = -(order + n + 8)
    return _dn_internal(n, low).window(-order, 0)


def bkl_crosscheck(l_max: int) -> dict:
    """Doubly-indexed remainder coefficients b_{k,l} of
    F^(3l-4k)(delta) * tau^-l, computed two independent ways.

    Route (a) reads the F^(3l-4k) coefficient off the C-table of index l;
    route (b) reads the tau^-l coefficient off the D-series of index
    3l-4k.  Returns {(k, l): (c_value, d_value, agree)}.
    """
    if l_max > 4:
        raise ValueError("tables beyond l = 4 are not pinned; refusing")
    out = {}
    for l in range(0, l_max + 1):
        c_tab = cn_table(l)
        for k in range(0, 3 * l // 4 + 1):
            deriv_order = 3 * l - 4 * k
            c_val = c_tab.entries.get(deriv_order, GR_ZERO)
            d_val = dn_series(deriv_order, l).coeff(-l)
            out[(k, l)] = (c_val, d_val, c_val == d_val)
    return out


# ---------------------------------------------------------------------------
# Dump format (consumed by the CLI)


def format_record(table: str, n: int, k: int, value: GaussianRational) -> str:
    """One dump record: "TABLE n k re_num/re_den im_num/im_den"."""
    re, im = value.re, value.im
    return (f"{table} {n} {k} "
            f"{re.numerator}/{re.denominator} {im.numerator}/{im.denominator}")
