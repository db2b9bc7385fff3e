"""Command-line front end: evaluation, coefficient dumps, zero scans, and
the verification suites.

Exit codes: 0 success, 1 usage, 2 domain, 3 completeness, 4 verification
failure.  Floats are printed with 17 significant digits; exact rationals
as num/den pairs.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import exp, mpc, mpf, nstr, pi

from . import contour, exactcoeff, zeros
from .errors import CompletenessError, DomainError, PrecisionError
from .precision import ORACLE_PREC, fmt17, working
from .theta import theta_reference, theta_series
from .zeta_eval import RSConfig, z_function, zeta_critical, zeta_strip

PINNED_MAX_N = 4


@dataclass(frozen=True)
class CliConfig:
    precision_bits: int | None = None   # None: 53 on formula paths, 256 on oracle paths
    terms: int = 5
    format: str = "json"

    def __post_init__(self):
        if self.precision_bits is not None and self.precision_bits < 53:
            raise DomainError("precision must be >= 53 bits")
        if self.terms > 5:
            raise DomainError("terms is capped at 5")

    def rs_prec(self):
        return self.precision_bits if self.precision_bits is not None else 53

    def oracle_prec(self):
        return self.precision_bits if self.precision_bits is not None else ORACLE_PREC


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _render_json(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        items = [f'{pad}  "{k}": {_render_json(v, indent + 1).lstrip()}'
                 for k, v in obj.items()]
        return pad + "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        items = [_render_json(v, indent + 1) for v in obj]
        return pad + "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return pad + ("true" if obj else "false")
    if isinstance(obj, int):
        return pad + str(obj)
    if isinstance(obj, str):
        return pad + f'"{obj}"'
    if obj is None:
        return pad + "null"
    return pad + fmt17(obj)


def _plain(v):
    if isinstance(v, (bool, int, str, list, tuple, dict)):
        return str(v)
    return fmt17(v)


def _emit(payload, fmt):
    if fmt == "text":
        for k, v in payload.items():
            print(f"{k} = {_plain(v)}")
    elif fmt == "csv":
        print("key,value")
        for k, v in payload.items():
            print(f"{k},{_plain(v)}")
    else:
        print(_render_json(payload))


# ---------------------------------------------------------------------------
# subcommands


def cmd_z(args, cfg):
    br = z_function(mpf(args.t), RSConfig(correction_terms=cfg.terms,
                                          precision_bits=cfg.rs_prec()))
    _emit({"t": br.t, "m": br.m, "delta": br.delta, "theta": br.theta,
           "main_sum": br.main_sum, "remainder": br.remainder, "z": br.z,
           "err_est": br.error_estimate}, cfg.format)
    return 0


def cmd_zeta(args, cfg):
    t = mpf(args.t)
    sigma = mpf(args.sigma)
    with working(cfg.rs_prec() + 20):
        if sigma == mpf("0.5"):
            val = zeta_critical(t, RSConfig(correction_terms=cfg.terms,
                                            precision_bits=cfg.rs_prec()))
        else:
            val = zeta_strip(mpc(sigma, t), cfg.terms, prec=cfg.rs_prec())
    _emit({"sigma": sigma, "t": t, "re": val.real, "im": val.imag,
           "abs": abs(val)}, cfg.format)
    return 0


def cmd_theta(args, cfg):
    t = mpf(args.t)
    ref = theta_reference(t, cfg.oracle_prec())
    payload = {"t": t, "reference": ref.theta}
    if t >= 10:
        ser = theta_series(t, min(cfg.terms, 5) or 4, cfg.oracle_prec())
        payload["series"] = ser.theta
        payload["series_err_est"] = ser.error_estimate
        payload["difference"] = abs(ser.theta - ref.theta)
    _emit(payload, cfg.format)
    return 0


def _coeff_records(table, n, order, sigma):
    if table == "A":
        combo = exactcoeff.an_table(n, sigma)
        return [(n, k, v) for k, v in sorted(combo.entries.items())]
    if table == "C":
        combo = exactcoeff.cn_table(n)
        return [(n, k, v) for k, v in sorted(combo.entries.items())]
    if table == "D":
        series = exactcoeff.dn_series(n, order)
        return [(n, e, c) for e, c in sorted(series.terms.items(), reverse=True)]
    if table == "E":
        vals = exactcoeff.euler_secant_numbers(n)
        return [(n, 0, exactcoeff.GaussianRational.of(vals[n]))]
    vals = exactcoeff.fn_numbers(n)
    return [(n, 0, exactcoeff.GaussianRational.of(vals[n]))]


def cmd_coeffs(args, cfg):
    if args.n > PINNED_MAX_N and not args.experimental:
        print(f"error: n = {args.n} beyond the pinned tables (n <= "
              f"{PINNED_MAX_N}); pass --experimental to extrapolate",
              file=sys.stderr)
        return 2
    sigma = Fraction(args.sigma)
    for n, k, v in _coeff_records(args.table, args.n, args.order, sigma):
        print(exactcoeff.format_record(args.table, n, k, v))
    return 0


def cmd_zeros(args, cfg):
    t_lo, t_hi = mpf(args.t_lo), mpf(args.t_hi)
    if not t_lo < t_hi:
        print("error: need t_lo < t_hi", file=sys.stderr)
        return 1
    records = zeros.scan_zeros(
        t_lo, t_hi, method=args.method,
        prec=cfg.oracle_prec() if args.method == "oracle" else cfg.precision_bits)
    sys.stdout.write(zeros.zeros_to_csv(records))
    if args.summary:
        with working(cfg.oracle_prec() + 20):
            expected = (theta_reference(t_hi, cfg.oracle_prec()).theta
                        - theta_reference(t_lo, cfg.oracle_prec()).theta) / pi
        print(f"# count={len(records)} smooth_expected={float(expected):.3f}")
    return 0


def cmd_phi(args, cfg):
    u = mpc(mpf(args.re), mpf(args.im))
    with working(cfg.oracle_prec()):
        quad = contour.phi_u(u)
        closed = contour.phi_closed(u)
    _emit({"u_re": u.real, "u_im": u.imag,
           "quadrature_re": quad.value.real, "quadrature_im": quad.value.imag,
           "quadrature_err_est": quad.error_estimate,
           "closed_re": closed.real, "closed_im": closed.imag,
           "difference": abs(quad.value - closed)}, cfg.format)
    return 0


def cmd_fs(args, cfg):
    s = mpc(mpf(args.re), mpf(args.im))
    res = contour.f_s(s, prec=max(cfg.rs_prec(), 120))
    _emit({"s_re": s.real, "s_im": s.imag, "re": res.value.real,
           "im": res.value.imag, "err_est": res.error_estimate}, cfg.format)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _check(name, residual, tolerance):
    return {"name": name, "residual": residual, "tolerance": tolerance,
            "pass": bool(abs(residual) <= tolerance)}


def _suite_phi():
    checks = []
    with working(90):
        worst = mpf(0)
        for k in range(1, 10):
            u = mpf(k) / 10
            worst = max(worst, abs(contour.phi_u(u).value - contour.phi_closed(u)))
        checks.append(_check("closed_form_grid_9pts", worst, mpf("1e-10")))
        g = contour.gauss_line_integral()
        checks.append(_check("gauss_line_vs_exp_3pi_i_4",
                             abs(g.value - exp(3 * pi * mpc(0, 1) / 4)),
                             mpf("1e-12")))
        rng = random.Random(1001)
        worst_shift = mpf(0)
        worst_residue = mpf(0)
        for _ in range(10):
            u = mpc(rng.uniform(-1, 1), rng.uniform(-0.8, 0.8))
            shift = contour.phi_u(u + 1).value - contour.phi_u(u).value \
                - exp(pi * mpc(0, 1) * (u + mpf("0.5")) ** 2) * exp(3 * pi * mpc(0, 1) / 4)
            residue = contour.phi_u(u).value \
                - exp(-2 * pi * mpc(0, 1) * u) * contour.phi_u(u + 1).value - 1
            worst_shift = max(worst_shift, abs(shift))
            worst_residue = max(worst_residue, abs(residue))
        checks.append(_check("gaussian_shift_equation_10pts", worst_shift, mpf("1e-9")))
        checks.append(_check("residue_equation_10pts", worst_residue, mpf("1e-9")))
        for n, u in ((1, mpc("0.4")), (2, mpc("0.6"))):
            left, right = contour.moment_check(n, u)
            checks.append(_check(f"moment_n{n}", abs(left - right), mpf("1e-8")))
    return checks


def _suite_functional():
    return [
        _check("completed_zeta_at_half_plus_20i",
               contour.functional_equation_check(mpc("0.5", 20)), mpf("1e-8")),
        _check("completed_zeta_at_2_plus_15i",
               contour.functional_equation_check(mpc(2, 15)), mpf("1e-8")),
    ]


def _suite_critical():
    from .theta import log_gamma
    checks = [
        _check("real_part_identity_t20", contour.critical_line_identity(20),
               mpf("1e-6")),
        _check("real_part_identity_t50", contour.critical_line_identity(50),
               mpf("1e-6")),
    ]
    with working(200):
        s = mpc("0.5", mpf("14.1347"))
        pref = pi ** (-s / 2) * exp(log_gamma(s / 2, 160))
        val = (2 * pref * contour.f_s(s, prec=160).value).real
        checks.append(_check("vanishes_at_first_zero", val, mpf("1e-3")))
    return checks


def _suite_sumcheck(t_max=500):
    rep = zeros.zero_sum_check(t_max)
    reference = mpf("0.02309570896612103381")
    closed = _check("closed_form_20_digits", rep.closed_form - reference,
                    mpf("1e-18"))
    closed["closed_form"] = nstr(rep.closed_form, 21)
    return [
        closed,
        _check(f"partial_plus_tail_T{int(t_max)}", rep.discrepancy, mpf("1e-3")),
    ]


def _suite_fidelity():
    rep = zeros.riemann_fidelity_report()
    return [
        _check("a1_relative_error_vs_3_per_mille", rep.a1_relative_error,
               rep.a1_bound),
        _check("a1_vs_gram_value", rep.a1_vs_gram, mpf("5e-4")),
        _check("a3_vs_gram_value", rep.a3_vs_gram, mpf("1e-2")),
        _check("a3_discrepancy_near_0.30", rep.a3_discrepancy - mpf("0.30"),
               mpf("0.01")),
        _check("rs_vs_oracle_first_zero", rep.rs_oracle_gap_a1, mpf("1e-4")),
    ]


def _suite_asymptotic():
    q1, l1 = contour.f_asymptotic_leading(mpc(-50, 10))
    q2, l2 = contour.f_asymptotic_leading(mpc(-80, 10))
    r1, r2 = abs(q1 / l1 - 1), abs(q2 / l2 - 1)
    return [
        _check("leading_ratio_at_minus50", r1, mpf("0.1")),
        _check("improves_at_minus80", r2, r1),
    ]


SUITES = {
    "phi": _suite_phi,
    "functional": _suite_functional,
    "critical": _suite_critical,
    "sumcheck": _suite_sumcheck,
    "fidelity": _suite_fidelity,
    "asymptotic": _suite_asymptotic,
}


def cmd_verify(args, cfg):
    if args.suite == "sumcheck":
        checks = _suite_sumcheck(t_max=args.t_max)
    else:
        checks = SUITES[args.suite]()
    payload = {"suite": args.suite, "checks": checks}
    _emit(payload, "json")
    return 0 if all(c["pass"] for c in checks) else 4


# ---------------------------------------------------------------------------


def _add_common(parser, suppress):
    # the same flags live on the root parser and on every subparser, so
    # they may appear on either side of the subcommand; the subparser
    # copies suppress their defaults to avoid clobbering root values
    sup = argparse.SUPPRESS
    parser.add_argument("--precision", type=int,
                        default=sup if suppress else None,
                        help="working precision in bits (>= 53; default 53 "
                             "for formula paths, 256 for oracle paths)")
    parser.add_argument("--terms", type=int, default=sup if suppress else 5,
                        help="correction terms (0..5)")
    parser.add_argument("--format", choices=["json", "csv", "text"],
                        default=sup if suppress else "json")
    parser.add_argument("--experimental", action="store_true",
                        default=sup if suppress else False,
                        help="allow coefficient tables beyond the pinned range")


def build_parser():
    parser = _Parser(prog="rszeta", description=__doc__)
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def subcommand(name, **kw):
        p = sub.add_parser(name, **kw)
        _add_common(p, suppress=True)
        return p

    p = subcommand("z", help="Riemann-Siegel Z(t) with breakdown")
    p.add_argument("t")
    p.set_defaults(fn=cmd_z)

    p = subcommand("zeta", help="zeta on the critical line or in the strip")
    p.add_argument("t")
    p.add_argument("--sigma", default="0.5")
    p.set_defaults(fn=cmd_zeta)

    p = subcommand("theta", help="phase angle by both routes")
    p.add_argument("t")
    p.set_defaults(fn=cmd_theta)

    p = subcommand("coeffs", help="exact coefficient tables")
    p.add_argument("table", choices=["A", "C", "D", "E", "F"])
    p.add_argument("n", type=int)
    p.add_argument("--order", type=int, default=8,
                   help="truncation depth for D tables")
    p.add_argument("--sigma", default="1/2", help="sigma for A tables")
    p.set_defaults(fn=cmd_coeffs)

    p = subcommand("zeros", help="scan and refine sign-change zeros")
    p.add_argument("t_lo")
    p.add_argument("t_hi")
    p.add_argument("--method", choices=["rs", "oracle"], default="oracle")
    p.add_argument("--summary", action="store_true")
    p.set_defaults(fn=cmd_zeros)

    p = subcommand("phi", help="lattice-Gaussian integral vs closed form")
    p.add_argument("re")
    p.add_argument("im", nargs="?", default="0")
    p.set_defaults(fn=cmd_phi)

    p = subcommand("fs", help="the entire transcendent f(s) by quadrature")
    p.add_argument("re")
    p.add_argument("im")
    p.set_defaults(fn=cmd_fs)

    p = subcommand("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--t-max", type=float, default=500,
                   help="scan ceiling for the sumcheck suite")
    p.set_defaults(fn=cmd_verify)

    p = subcommand("sumcheck", help="alias for `verify sumcheck`")
    p.add_argument("--t-max", type=float, default=500)
    p.set_defaults(fn=cmd_verify, suite="sumcheck")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        cfg = CliConfig(precision_bits=args.precision, terms=args.terms,
                        format=args.format)
        return args.fn(args, cfg)
    except (DomainError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CompletenessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
