"""Line-quadrature identities for the lattice-Gaussian integrals."""

import random

import pytest
from mpmath import conj, exp, mpc, mpf, pi, sqrt

from rszeta.contour import (
    DOWN_LEFT,
    DOWN_RIGHT,
    UP_LEFT,
    ContourSpec,
    TruncationWarning,
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
from rszeta.errors import DomainError
from rszeta.precision import working


class TestPhi:
    def test_half_point_value(self):
        with working(80):
            want = mpf("0.5") - sqrt(mpf(2)) / 4 * (1 - mpc(0, 1))
            assert abs(phi_closed(mpf("0.5")) - want) < mpf("1e-15")
            assert abs(phi_u(mpf("0.5")).value - want) < mpf("1e-12")

    def test_closed_form_grid_agreement(self):
        with working(80):
            for k in range(1, 10):
                u = mpf(k) / 10
                assert abs(phi_u(u).value - phi_closed(u)) <= mpf("1e-10"), u

    def test_difference_equation_shift(self):
        with working(80):
            u = mpc("0.3")
            lhs = phi_u(u + 1).value - phi_u(u).value
            rhs = exp(pi * mpc(0, 1) * (u + mpf("0.5")) ** 2) * exp(3 * pi * mpc(0, 1) / 4)
            assert abs(lhs - rhs) < mpf("1e-10")

    def test_difference_equation_residue(self):
        with working(80):
            u = mpc("0.3")
            lhs = phi_u(u).value - exp(-2 * pi * mpc(0, 1) * u) * phi_u(u + 1).value
            assert abs(lhs - 1) < mpf("1e-10")

    def test_difference_equations_random(self):
        rng = random.Random(5)
        with working(80):
            for _ in range(10):
                u = mpc(rng.uniform(-1, 1), rng.uniform(-0.8, 0.8))
                lhs = phi_u(u).value - exp(-2 * pi * mpc(0, 1) * u) * phi_u(u + 1).value
                assert abs(lhs - 1) <= mpf("1e-9")
                shift = phi_u(u + 1).value - phi_u(u).value
                gauss = exp(pi * mpc(0, 1) * (u + mpf("0.5")) ** 2) \
                    * exp(3 * pi * mpc(0, 1) / 4)
                assert abs(shift - gauss) <= mpf("1e-9")

    def test_entire_at_integers(self):
        with working(80):
            assert abs(phi_closed(0) - mpf("0.5")) < mpf("1e-20")
            assert abs(phi_closed(1) + mpf("0.5")) < mpf("1e-20")
            # continuity across the local-form switch at |eps| = 0.05
            inner = phi_closed(mpf("0.0499"))
            outer = phi_closed(mpf("0.0501"))
            assert abs(inner - outer) < mpf("1e-3")
            # local form consistent with the grid value
            assert abs(phi_u(mpf("0.001")).value - phi_closed(mpf("0.001"))) < mpf("1e-10")

    def test_path_independence_of_crossing(self):
        with working(80):
            vals = [phi_u(mpc("0.3", "0.2"), ContourSpec(crossing=c)).value
                    for c in (0.3, 0.5, 0.7)]
            assert abs(vals[0] - vals[1]) < mpf("1e-10")
            assert abs(vals[2] - vals[1]) < mpf("1e-10")

    def test_truncation_warning(self):
        with pytest.warns(TruncationWarning):
            phi_u(mpc(0, 4), ContourSpec(half_length=5.0))

    def test_pole_guard_rejects_grazing_path(self):
        with pytest.raises(ValueError):
            phi_u(mpf("0.3"), ContourSpec(crossing=0.05))


class TestGaussLine:
    def test_value(self):
        with working(80):
            g = gauss_line_integral()
            assert abs(g.value - exp(3 * pi * mpc(0, 1) / 4)) < mpf("1e-12")

    def test_crossing_independence(self):
        with working(80):
            a = gauss_line_integral(ContourSpec(crossing=0.3)).value
            b = gauss_line_integral(ContourSpec(crossing=0.7)).value
            assert abs(a - b) < mpf("1e-12")

    def test_step_halving_factor(self):
        with working(100):
            coarse = gauss_line_integral(ContourSpec(step=0.1), prec=100)
            fine = gauss_line_integral(ContourSpec(step=0.05), prec=100)
            assert fine.error_estimate * 100 <= coarse.error_estimate


class TestPhiTau:
    def test_specialisation(self):
        with working(80):
            assert abs(phi_tau_u(-1, mpc("0.5")).value - phi_u(mpc("0.5")).value) \
                < mpf("1e-12")

    def test_self_consistency_under_halving(self):
        with working(80):
            a = phi_tau_u(-2, 0, ContourSpec(step=0.05)).value
            b = phi_tau_u(-2, 0, ContourSpec(step=0.025)).value
            assert abs(a - b) < mpf("1e-10")

    def test_residue_difference_equation(self):
        with working(80):
            u = mpc("0.25")
            lhs = phi_tau_u(-1, u).value \
                - exp(-2 * pi * mpc(0, 1) * u) * phi_tau_u(-1, u + 1).value
            assert abs(lhs - 1) < mpf("1e-10")

    def test_domain(self):
        with pytest.raises(DomainError):
            phi_tau_u(mpc("0.5"), 0)


class TestMoments:
    def test_n0_reduces_to_closed_form(self):
        with working(80):
            left, right = moment_check(0, mpc("0.3"))
            assert abs(left - right) < mpf("1e-10")
            assert abs(left - phi_closed(mpc("0.3"))) < mpf("1e-10")

    @pytest.mark.parametrize("n,u", [(1, "0.4"), (2, "0.6")])
    def test_derivative_sides_agree(self, n, u):
        with working(80):
            left, right = moment_check(n, mpc(u))
            assert abs(left - right) <= mpf("1e-8")

    def test_order_cap(self):
        with pytest.raises(DomainError):
            moment_check(5, mpc("0.3"))


class TestFs:
    def test_far_right_near_one(self):
        with working(120):
            v = f_s(mpc(2, 30), prec=120)
            assert abs(v.value - 1) < mpf("0.75")

    def test_conjugate_pair_on_line(self):
        with working(120):
            for t in (10, 20, 40):
                a = f_s(mpc("0.5", t), prec=120).value
                b = f_s_reflected(mpc("0.5", t), prec=120).value
                assert abs(b - conj(a)) <= mpf("1e-10"), t

    def test_real_argument_stable(self):
        with working(120):
            a = f_s(mpc("0.5", 0), spec=ContourSpec(direction=DOWN_LEFT, step=0.05),
                    prec=120).value
            b = f_s(mpc("0.5", 0), spec=ContourSpec(direction=DOWN_LEFT, step=0.025),
                    prec=120).value
            assert abs(a - b) < mpf("1e-10")

    def test_crossing_stability(self):
        # crossing 0.4 halves the distance to the branch point at 0, which
        # raises the grid bandwidth; step 0.03 resolves both placements
        with working(120):
            s = mpc("0.5", 20)
            a = f_s_reflected(s, ContourSpec(crossing=0.4, direction=DOWN_RIGHT,
                                             step=0.03), prec=120).value
            b = f_s_reflected(s, ContourSpec(crossing=0.6, direction=DOWN_RIGHT,
                                             step=0.03), prec=120).value
            assert abs(a - b) < mpf("1e-10")

    def test_reflected_step_halving(self):
        with working(140):
            s = mpc("0.5", 12)
            coarse = f_s_reflected(s, ContourSpec(step=0.08, direction=DOWN_RIGHT),
                                   prec=140)
            fine = f_s_reflected(s, ContourSpec(step=0.04, direction=DOWN_RIGHT),
                                 prec=140)
            assert fine.error_estimate * 100 <= coarse.error_estimate

    def test_budget_refusal(self):
        with pytest.raises(DomainError):
            f_s(mpc("0.5", 150))

    def test_wrong_direction_rejected(self):
        with pytest.raises(ValueError):
            f_s(mpc("0.5", 20), spec=ContourSpec(direction=UP_LEFT))


class TestFunctionalEquation:
    @pytest.mark.parametrize("s", [mpc("0.5", 20), mpc(2, 15)])
    def test_residual(self, s):
        assert functional_equation_check(s) <= mpf("1e-8")

    def test_fixed_point_is_identity(self):
        # at s = 1/2 both completed sides coincide literally
        s = mpc("0.5", 20)
        with working(120):
            from rszeta.theta import log_gamma
            from rszeta.zeta_eval import oracle_zeta
            lhs = pi ** (-s / 2) * exp(log_gamma(s / 2, 120)) * oracle_zeta(s)
            rhs = pi ** (-(1 - s) / 2) * exp(log_gamma((1 - s) / 2, 120)) \
                * oracle_zeta(1 - s)
            assert abs(lhs - rhs) < mpf("1e-18")

    def test_window(self):
        with pytest.raises(DomainError):
            functional_equation_check(mpc(8, 20))


class TestCriticalLineIdentity:
    @pytest.mark.parametrize("t", [20, 50])
    def test_residual(self, t):
        assert critical_line_identity(t) <= mpf("1e-6")

    def test_vanishes_at_first_zero(self):
        # Re(phi) tracks the completed zeta, which vanishes at 14.1347...
        with working(160):
            t = mpf("14.1347")
            s = mpc("0.5", t)
            from rszeta.theta import log_gamma
            pref = pi ** (-s / 2) * exp(log_gamma(s / 2, 160))
            val = (2 * pref * f_s(s, prec=160).value).real
            assert abs(val) < mpf("1e-3")


class TestAsymptoticLeading:
    def test_ratio_within_tenth(self):
        q, lead = f_asymptotic_leading(mpc(-50, 10))
        assert abs(q / lead - 1) <= mpf("0.1")

    def test_improves_deeper_left(self):
        q1, l1 = f_asymptotic_leading(mpc(-50, 10))
        q2, l2 = f_asymptotic_leading(mpc(-80, 10))
        assert abs(q2 / l2 - 1) < abs(q1 / l1 - 1)

    def test_eta_branch(self):
        from mpmath import arg, sqrt as msqrt
        with working(80):
            for s in (mpc(-50, 10), mpc(-80, 10)):
                eta = msqrt((s - 1) / (2 * pi * mpc(0, 1)))
                assert 0 < arg(eta) < pi / 4

    def test_region_gate(self):
        with pytest.raises(DomainError):
            f_asymptotic_leading(mpc(-2, 50))


class TestGs:
    def test_prefactor_never_vanishes(self):
        rng = random.Random(9)
        with working(100):
            from rszeta.theta import log_gamma
            for _ in range(10):
                s = mpc(rng.uniform(-3, 3), rng.uniform(5, 60))
                pref = pi ** (-(s + 1) / 2) * exp(-pi * mpc(0, 1) * s / 4) \
                    * exp(log_gamma((s + 1) / 2, 100))
                assert abs(pref) > 0

    def test_magnitude_law(self):
        with working(120):
            t = mpf(20)
            s = mpc("0.5", t)
            num = abs(g_s(s, prec=120).value)
            den = sqrt(mpf(2)) * pi ** mpf("-0.25") * (t / 2) ** mpf("0.25") \
                * abs(f_s(s, prec=120).value)
            assert abs(num / den - 1) < mpf("0.05")

    def test_stable_under_step_halving(self):
        with working(160):
            s = mpc("0.5", 30)
            a = g_s(s, spec=ContourSpec(step=0.025, direction=DOWN_LEFT), prec=160)
            b = g_s(s, spec=ContourSpec(step=0.0125, direction=DOWN_LEFT), prec=160)
            assert abs(a.value) > 0 and abs(a.value - b.value) < mpf("1e-10")
