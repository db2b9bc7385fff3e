"""Small helpers around mpmath's global precision context.

Every public operation in this package runs under an explicit
``mp.workprec`` block, so results depend only on arguments, never on
ambient state.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpc, mpf, mpmathify

DEFAULT_PREC = 53
ORACLE_PREC = 256


def working(bits):
    """Context manager setting the binary working precision."""
    return mp.workprec(int(bits))


def real(x):
    """Coerce to mpf at the current working precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpmathify(x)


def comp(x):
    """Coerce to mpc at the current working precision."""
    return mpc(mpmathify(x))


def as_fraction(x):
    """Exact Fraction for a float/mpf input (binary value taken literally)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(float(x))


def pairwise_sum(values):
    """Sum with a fixed pairwise reduction tree.

    The reduction order is a function of len(values) only, so concurrent
    producers of the same value list reduce bit-identically.
    """
    vals = list(values)
    if not vals:
        return mpf(0)
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def fmt17(x):
    """Float rendered with 17 significant digits (round-trip safe)."""
    return "%.17g" % float(x)
