"""Randomized end-to-end consistency: closed forms vs measurement.

For randomly drawn parameter tuples of every closed-form kind, the
classifier + closed-form vector must agree with a direct window scan.
This cross-validates the region decision tree, the residue machinery,
the theorem formulas, and the optimized scan against each other with no
shared code path beyond exact floor evaluation.
"""

from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from beattydim import (
    HorizonTooSmall,
    ParamTuple,
    classify_region,
    closed_form_d,
    default_horizon,
    empirical_densities,
)
from beattydim.numerics import rational, surd


def gaps(p, n=30_000, entries=3):
    closed = closed_form_d(p, classify_region(p))
    try:
        emp = empirical_densities(p, [(1, n)])
    except HorizonTooSmall:
        # slow chain mixing (stay probability near 1): the documented
        # remedy is a larger horizon
        emp = empirical_densities(p, [(1, n)], horizon=4 * default_horizon(p, n))
    out = [abs(emp.entry_float(i) - float(closed.entry(i)))
           for i in range(1, entries + 1)]
    out.append(abs(emp.d_inf_float() - float(closed.d_inf)))
    return max(out)


def test_random_integer_tuples():
    rng = np.random.default_rng(90125)
    made = 0
    while made < 20:
        a = int(rng.integers(1, 7))
        g = int(rng.integers(a + 1, 10))
        b = int(rng.integers(-4, 5))
        d = int(rng.integers(-4, 5))
        p = ParamTuple(a, b, g, d)
        assert gaps(p) < 5e-3, (a, b, g, d)
        made += 1


def test_random_rational_tuples():
    rng = np.random.default_rng(5150)
    made = 0
    while made < 20:
        aq = int(rng.integers(1, 5))
        ap = int(rng.integers(aq + 1, 5 * aq))
        gq = int(rng.integers(1, 5))
        gp = int(rng.integers(1, 8 * gq))
        alpha, gamma = Fraction(ap, aq), Fraction(gp, gq)
        if not (1 < alpha < gamma) or gamma - alpha < Fraction(1, 4):
            continue
        beta = Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 4)))
        delta = Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 4)))
        p = ParamTuple(rational(alpha), rational(beta),
                       rational(gamma), rational(delta))
        assert classify_region(p).id in ("R2", "R7", "R8", "R9", "R10")
        assert gaps(p) < 5e-3, (alpha, beta, gamma, delta)
        made += 1


def test_random_surd_shifted_rational_params():
    # rational alpha, gamma with irrational shifts still go through the
    # residue machinery (the residue sets floor the surd shifts exactly)
    rng = np.random.default_rng(2112)
    made = 0
    while made < 8:
        alpha = Fraction(int(rng.integers(2, 7)), int(rng.integers(1, 3)))
        gamma = alpha + Fraction(int(rng.integers(1, 6)), 2)
        if alpha <= 1:
            continue
        beta = surd(0, Fraction(1, int(rng.integers(1, 4))),
                    int(rng.choice([2, 3, 5])))
        delta = surd(int(rng.integers(-2, 3)), Fraction(-1, 3),
                     int(rng.choice([2, 5, 7])))
        p = ParamTuple(rational(alpha), beta, rational(gamma), delta)
        assert classify_region(p).id == "R2"
        assert gaps(p) < 5e-3, (alpha, gamma)
        made += 1


def test_random_independent_surd_tuples():
    rng = np.random.default_rng(1984)
    pairs = [(2, 3), (2, 5), (3, 5), (2, 7), (5, 6), (3, 10)]
    made = 0
    for da, dg in pairs * 3:
        if made >= 6:
            break
        ba = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 3)))
        alpha = surd(1, ba, da)
        gamma = surd(2, Fraction(int(rng.integers(1, 3)), 1), dg)
        beta = Fraction(int(rng.integers(-3, 4)), 3)
        delta = Fraction(int(rng.integers(-3, 4)), 3)
        try:
            p = ParamTuple(alpha, beta, gamma, delta)
        except ValueError:
            continue  # drawn with alpha >= gamma
        rid = classify_region(p).id
        assert rid == "R4", (alpha, gamma, rid)
        assert gaps(p) < 1e-2, (float(alpha), float(gamma))
        made += 1
    assert made >= 4


def test_random_surd_alpha_rational_gamma():
    rng = np.random.default_rng(777)
    for d in (2, 3, 5, 7, 10):
        alpha = surd(1, Fraction(1, int(rng.integers(1, 4))), d)
        gamma = rational(int(rng.integers(3, 8)),
                         int(rng.integers(1, 3)))
        if not float(gamma) > float(alpha) + 0.25:
            continue
        beta = Fraction(int(rng.integers(-3, 4)), 2)
        p = ParamTuple(alpha, beta, gamma, 0)
        assert classify_region(p).id == "R3"
        assert gaps(p) < 1e-2, (float(alpha), float(gamma))
