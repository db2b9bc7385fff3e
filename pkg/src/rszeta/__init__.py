"""Riemann-Siegel machinery: exact coefficient tables, critical-line and
strip evaluation of zeta, contour-integral identity checks, and zero
scanning, with an independent high-precision oracle throughout."""

from .errors import (
    CompletenessError,
    ConvergenceError,
    DomainError,
    PrecisionError,
    TruncationWarning,
)
from .exactcoeff import (
    DerivativeCombo,
    FormalSeries,
    GaussianRational,
    ak_saddle_coeffs,
    an_table,
    bernoulli_numbers,
    bkl_crosscheck,
    bn_series,
    cn_table,
    dn_series,
    euler_secant_numbers,
    fn_numbers,
)
from .psifun import FDerivatives, f_derivatives, f_value
from .theta import (
    ThetaValue,
    log_abs_gamma_series,
    log_gamma,
    omega,
    theta_reference,
    theta_series,
)
from .zeta_eval import (
    RSBreakdown,
    RSConfig,
    oracle_z,
    oracle_zeta,
    z_function,
    zeta_critical,
    zeta_strip,
)
from .contour import (
    ContourSpec,
    QuadratureResult,
    critical_line_identity,
    f_asymptotic_leading,
    f_s,
    f_s_reflected,
    functional_equation_check,
    g_s,
    gauss_line_integral,
    moment_check,
    phi_closed,
    phi_tau_u,
    phi_u,
)
from .zeros import (
    FidelityReport,
    SumCheckReport,
    ZeroCount,
    ZeroRecord,
    count_zeros,
    euler_gamma,
    gram_point,
    riemann_fidelity_report,
    scan_zeros,
    zero_sum_check,
    zeros_to_csv,
)

__version__ = "0.1.0"
