"""Exact coefficient tables against their classically printed values."""

from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rszeta.exactcoeff import (
    GR_I,
    GR_ONE,
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
    format_record,
    phase_series,
    series_exp,
)

HALF = Fr(1, 2)


def gr(re, im=0):
    return GaussianRational.of(Fr(re), Fr(im))


class TestBSeries:
    def test_b0_leading_coefficients(self):
        b0 = bn_series(0, HALF)
        assert b0.coeff(0) == GR_ONE
        assert b0.coeff(-2) == GR_I
        assert b0.coeff(-4) == gr(Fr(-1, 2))
        assert b0.coeff(-1).is_zero and b0.coeff(-3).is_zero

    def test_b1_polynomial_part(self):
        b1 = bn_series(1, HALF)
        poly = {e: c for e, c in b1.terms.items() if e >= 0}
        assert poly == {3: gr(Fr(-1, 4))}

    def test_b2_polynomial_part(self):
        b2 = bn_series(2, HALF)
        assert b2.coeff(6) == gr(Fr(5, 8))
        assert b2.coeff(2) == gr(Fr(1, 8))
        assert b2.coeff(0) == gr(0, Fr(1, 48))
        assert b2.coeff(4).is_zero

    def test_b3_b4_polynomial_parts(self):
        b3 = bn_series(3, HALF)
        assert b3.coeff(9) == gr(Fr(-35, 8))
        assert b3.coeff(5) == gr(Fr(-1, 2))
        assert b3.coeff(3) == gr(0, Fr(-1, 192))
        assert b3.coeff(1) == gr(Fr(-1, 16))
        b4 = bn_series(4, HALF)
        assert b4.coeff(12) == gr(Fr(25 * 7 * 11, 32))
        assert b4.coeff(8) == gr(Fr(77, 16))
        assert b4.coeff(6) == gr(0, Fr(5, 384))
        assert b4.coeff(4) == gr(Fr(19, 64))
        assert b4.coeff(2) == gr(0, Fr(1, 384))
        assert b4.coeff(0) == gr(Fr(143, 4608))

    def test_returned_window(self):
        b3 = bn_series(3, HALF)
        assert b3.low_cutoff == -10 and b3.high_cutoff == 9


class TestATables:
    def test_a0_any_sigma(self):
        for sigma in (HALF, Fr(1, 4), Fr(3, 4), Fr(0)):
            assert an_table(0, sigma).entries == {0: GR_ONE}

    def test_a1(self):
        assert an_table(1, HALF).entries == {3: gr(Fr(-1, 24))}

    def test_a2(self):
        assert an_table(2, HALF).entries == {
            6: gr(Fr(1, 1152)),
            2: gr(Fr(1, 16)),
            0: gr(0, Fr(1, 48)),
        }

    def test_a3(self):
        assert an_table(3, HALF).entries == {
            9: gr(Fr(-1, 82944)),
            5: gr(Fr(-1, 240)),
            3: gr(0, Fr(-1, 1152)),
            1: gr(Fr(-1, 16)),
        }

    def test_a4(self):
        assert an_table(4, HALF).entries == {
            12: gr(Fr(1, 7962624)),
            8: gr(Fr(11, 92160)),
            6: gr(0, Fr(1, 55296)),
            4: gr(Fr(19, 1536)),
            2: gr(0, Fr(1, 768)),
            0: gr(Fr(143, 4608)),
        }


class TestCTables:
    def test_c0_and_c1(self):
        assert cn_table(0).entries == {0: GR_ONE}
        assert cn_table(1).entries == {3: gr(Fr(-1, 24))}

    def test_c2_order0_cancels(self):
        c2 = cn_table(2)
        assert c2.entries == {6: gr(Fr(1, 1152)), 2: gr(Fr(1, 16))}
        assert 0 not in c2.entries

    def test_c3(self):
        assert cn_table(3).entries == {
            9: gr(Fr(-1, 82944)),
            5: gr(Fr(-1, 240)),
            1: gr(Fr(-1, 16)),
        }

    def test_c4(self):
        assert cn_table(4).entries == {
            12: gr(Fr(1, 7962624)),
            8: gr(Fr(11, 92160)),
            4: gr(Fr(19, 1536)),
            0: gr(Fr(1, 32)),
        }

    @pytest.mark.parametrize("n", range(0, 9))
    def test_purely_real_up_to_8(self, n):
        assert cn_table(n).is_real

    def test_phase_series_printed_terms(self):
        # 1 - i/(2^4*3) t^-1 - 1/(2^9*3^2) t^-2 + ... with t^-1 = tau^-2
        p = phase_series(6)
        assert p.coeff(0) == GR_ONE
        assert p.coeff(-2) == gr(0, Fr(-1, 48))
        assert p.coeff(-4) == gr(Fr(-1, 4608))
        assert p.coeff(-1).is_zero and p.coeff(-3).is_zero


class TestSaddleCoeffs:
    def test_a0_is_one(self):
        a = ak_saddle_coeffs(0, HALF)
        assert a[0].terms == {0: GR_ONE}

    def test_a1_one_step_by_hand(self):
        # tau a_1 = -(1 - sigma) a_0, so a_1 = (sigma - 1)/tau
        for sigma in (HALF, Fr(1, 4), Fr(3, 4)):
            a = ak_saddle_coeffs(1, sigma)
            assert a[1].terms == {-1: gr(sigma - 1)}

    def test_a2_by_hand(self):
        # 2 tau a_2 = -(2 - sigma) a_1 => a_2 = (2-sigma)(1-sigma)/(2 tau^2)
        sigma = Fr(1, 4)
        a = ak_saddle_coeffs(2, sigma)
        assert a[2].terms == {-2: gr((2 - sigma) * (1 - sigma) / 2)}

    @pytest.mark.parametrize("n", range(0, 31))
    def test_degree_and_gap(self, n):
        a = ak_saddle_coeffs(n, HALF)[n]
        exps = [-e for e in a.exponents]  # powers of tau^-1
        assert max(exps) == n
        assert min(exps) == n - 2 * (n // 3)


class TestNumberSequences:
    def test_secant_numbers(self):
        assert euler_secant_numbers(3) == (1, 1, 5, 61)

    def test_f_numbers(self):
        assert fn_numbers(3) == (1, Fr(1, 3), Fr(7, 15), Fr(31, 21))

    def test_f4_one_more_step_by_hand(self):
        # 9 F_4 - 84 F_3 + 126 F_2 - 36 F_1 + F_0 = 0
        f = fn_numbers(4)
        assert 9 * f[4] - 84 * f[3] + 126 * f[2] - 36 * f[1] + f[0] == 0
        assert f[4] == Fr(127, 15)

    def test_bernoulli(self):
        b = bernoulli_numbers(3)
        assert b[2] == Fr(1, 6)
        assert b[3] == 0
        assert b[4] == Fr(-1, 30)
        assert b[6] == Fr(1, 42)

    @given(st.integers(min_value=0, max_value=20))
    @settings(max_examples=21, deadline=None)
    def test_e_positive_integers_f_positive(self, n):
        e = euler_secant_numbers(n)[n]
        f = fn_numbers(n)[n]
        assert e > 0 and e.denominator == 1
        assert f > 0


class TestDSeries:
    def test_d0(self):
        d0 = dn_series(0, 8)
        assert d0.terms == {0: GR_ONE, -4: gr(Fr(1, 32)), -8: gr(Fr(41, 2048))}

    def test_d1(self):
        d1 = dn_series(1, 7)
        assert d1.terms == {-3: gr(Fr(-1, 16)), -7: gr(Fr(-5, 128))}

    def test_d2(self):
        d2 = dn_series(2, 6)
        assert d2.terms == {-2: gr(Fr(1, 16)), -6: gr(Fr(5, 128))}

    def test_d3(self):
        d3 = dn_series(3, 5)
        assert d3.terms == {-1: gr(Fr(-1, 24)), -5: gr(Fr(-5, 192))}

    def test_d4(self):
        assert dn_series(4, 4).terms == {-4: gr(Fr(19, 1536))}

    @pytest.mark.parametrize("n", range(0, 13))
    def test_exponent_congruence_mod_4(self, n):
        d = dn_series(n, 16)
        assert all(e % 4 == n % 4 for e in d.exponents)

    @pytest.mark.parametrize("order", [4, 8, 12])
    def test_exp_omega_times_exp_neg_omega_is_one(self, order):
        from rszeta.exactcoeff import _omega_series

        om = _omega_series(-order - 4)
        prod = (series_exp(om) * series_exp(om.scale(-1))).window(-order, 0)
        assert prod.terms == {0: GR_ONE}

    def test_leading_order_growth_pattern(self):
        # D_{3n-2}, D_{3n-1}, D_{3n} lead with tau^-(n+2), tau^-(n+1), tau^-n
        for n in range(1, 5):
            for idx, lead in ((3 * n - 2, n + 2), (3 * n - 1, n + 1), (3 * n, n)):
                d = dn_series(idx, lead + 1)
                assert d.max_exponent() == -lead, (idx, lead)


class TestCrossCheck:
    def test_paper_listed_entries_agree(self):
        table = bkl_crosscheck(4)
        for key in [(0, 0), (3, 4), (2, 3), (1, 2), (0, 1), (2, 4)]:
            c_val, d_val, agree = table[key]
            assert agree, key
        assert table[(0, 0)][0] == GR_ONE
        assert table[(0, 1)][0] == gr(Fr(-1, 24))
        assert table[(1, 2)][0] == gr(Fr(1, 16))

    def test_all_entries_agree(self):
        assert all(rec[2] for rec in bkl_crosscheck(4).values())

    def test_refuses_unpinned_depth(self):
        with pytest.raises(ValueError):
            bkl_crosscheck(5)


def test_format_record():
    assert format_record("C", 1, 3, cn_table(1).entries[3]) == "C 1 3 -1/24 0/1"
    assert format_record("F", 3, 0, gr(Fr(31, 21))) == "F 3 0 31/21 0/1"


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
@settings(max_examples=30, deadline=None)
def test_bn_series_recursion_consistency(n, shift):
    # recomputing through the cached table path and directly must agree
    b = bn_series(n, HALF)
    exp = 3 * n - shift
    if exp >= b.low_cutoff:
        assert b.coeff(exp) == bn_series(n, HALF).coeff(exp)
