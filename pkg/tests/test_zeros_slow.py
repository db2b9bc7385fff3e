"""Whole-range scan invariants (minutes of runtime, run with the suite)."""

import pytest
from mpmath import mpf

from rszeta.precision import working
from rszeta.zeros import gram_point, scan_zeros


@pytest.fixture(scope="module")
def oracle_20_500():
    return scan_zeros(20, 500, method="oracle", prec=224)


def test_method_agreement_50_to_500(oracle_20_500):
    rs = scan_zeros(50, 500, method="rs")
    oracle = [r for r in oracle_20_500 if r.t > 50]
    assert len(rs) == len(oracle)
    worst = mpf(0)
    for a, b in zip(rs, oracle):
        worst = max(worst, abs(a.t - b.t))
    assert worst <= mpf("1e-4"), f"worst ordinate gap {float(worst):.2e}"


def test_gram_interval_interleaving_20_to_280(oracle_20_500):
    # one zero per Gram interval below the first classical violation
    with working(70):
        zs = [r.t for r in oracle_20_500 if r.t < 280]
        n = 1
        grams = []
        while True:
            g = gram_point(n)
            if g > 280:
                break
            if g > 20:
                grams.append(g)
            n += 1
        for lo, hi in zip(grams, grams[1:]):
            inside = [t for t in zs if lo < t <= hi]
            assert len(inside) == 1, (float(lo), float(hi), len(inside))
