from fractions import Fraction

import pytest

from k3siegel.symbolic import MPoly, MRat


def test_basic_arithmetic():
    d = MPoly.var(2, 0)
    t = MPoly.var(2, 1)
    p = (d + t) * (d - t)
    assert p == d * d - t * t
    assert (p - p).is_zero()
    assert d ** 3 == d * d * d
    assert MPoly.const(2, 0).is_zero()


def test_laurent_exponents():
    d = MPoly.var(1, 0)
    dinv = MPoly.var(1, 0, -1)
    assert d * dinv == MPoly.const(1, 1)
    assert MPoly.var(1, 0, -3) * d ** 5 == d ** 2


def test_mrat_cross_multiplied_equality():
    d = MPoly.var(1, 0)
    one = MPoly.const(1, 1)
    a = MRat(d * d - one, d - one)     # (d^2-1)/(d-1)
    b = MRat(d + one)                  # d+1
    assert a == b
    assert a + 1 == MRat(d + 2 * one)
    assert (a - b).num.is_zero()


def test_mrat_division():
    d = MPoly.var(1, 0)
    x = MRat(d) / MRat(d + 1)
    y = 1 / (1 + 1 / MRat(d))
    assert x == y
    with pytest.raises(ZeroDivisionError):
        MRat(d) / MRat(MPoly.const(1, 0))


def test_fraction_coefficients():
    d = MPoly.var(1, 0)
    p = d * Fraction(1, 2) + Fraction(1, 3)
    q = p * 6
    assert q == 3 * d + 2
