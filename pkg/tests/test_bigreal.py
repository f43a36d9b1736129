import math
import random

import mpmath
import pytest

from pibilliards import BigReal


def test_from_fraction_brackets_value():
    iv = BigReal.from_fraction(1, 3, 64)
    assert 3 * iv.lo <= (1 << 64) <= 3 * iv.hi
    assert iv.width() <= 2 ** -62


def test_pi_brackets_reference():
    with mpmath.workdps(120):
        ref = mpmath.mpf(mpmath.pi)
        for bits in (64, 128, 256, 400):
            iv = BigReal.pi(bits)
            scale = mpmath.mpf(2) ** bits
            assert iv.lo <= ref * scale <= iv.hi
            assert iv.width() < 2.0 ** (-bits + 4)


def test_atan_brackets_reference():
    with mpmath.workdps(120):
        for num, den in [(1, 5), (1, 239), (1, 10), (3, 7), (1, 100000)]:
            ref = mpmath.atan(mpmath.mpf(num) / den)
            iv = BigReal.atan_fraction(num, den, 192)
            scale = mpmath.mpf(2) ** 192
            assert iv.lo <= ref * scale <= iv.hi
            assert iv.width() < 2.0 ** -188


def test_interval_containment_under_precision_doubling():
    # results at 2x precision must lie inside the lower-precision intervals
    rng = random.Random(99)
    for _ in range(50):
        a_num, a_den = rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6)
        b_num, b_den = rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6)
        for op in ("add", "sub", "mul", "div"):
            lo_bits, hi_bits = 96, 192
            results = []
            for bits in (lo_bits, hi_bits):
                a = BigReal.from_fraction(a_num, a_den, bits)
                b = BigReal.from_fraction(b_num, b_den, bits)
                results.append({"add": a + b, "sub": a - b,
                                "mul": a * b, "div": a.divide(b)}[op])
            assert results[0].contains(results[1]), op


def test_pi_containment_under_doubling():
    coarse = BigReal.pi(80)
    fine = BigReal.pi(160)
    assert coarse.contains(fine)
    assert BigReal.atan_fraction(1, 10, 80).contains(BigReal.atan_fraction(1, 10, 160))


def test_floor_certified():
    assert BigReal.from_fraction(7, 2, 64).floor_certified() == 3
    assert BigReal.from_fraction(-7, 2, 64).floor_certified() == -4
    # interval straddling an integer cannot certify
    straddle = BigReal((4 << 64) - 3, (4 << 64) + 3, 64)
    assert straddle.floor_certified() is None


def test_divide_rejects_zero_straddle():
    a = BigReal.from_int(1, 64)
    z = BigReal(-1, 1, 64)
    with pytest.raises(ZeroDivisionError):
        a.divide(z)


def test_pi_over_atan_floor_matches_float_math():
    # pi / arctan(1/10) just above 31.4; certified floor must say 31
    pi_iv = BigReal.pi(128)
    beta_iv = BigReal.atan_fraction(1, 10, 128)
    q = pi_iv.divide(beta_iv)
    assert q.floor_certified() == 31
    assert q.midpoint() == pytest.approx(math.pi / math.atan(0.1), rel=1e-12)


def test_scale_int_exact():
    iv = BigReal.from_fraction(1, 7, 96)
    scaled = iv.scale_int(-21)
    assert scaled.lo <= -3 * (1 << 96) <= scaled.hi
    assert scaled.width() <= 21 * iv.width()
