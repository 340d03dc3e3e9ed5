import random
from fractions import Fraction as F

import pytest

from finfree.conv import add_conv
from finfree.errors import VanishingFirstMoment
from finfree.hyper import HypergeometricSpec, hyper_poly
from finfree.series import (
    FormalMomentSeries,
    free_add,
    free_mult,
    free_mult_via_kreweras,
    moments_from_r,
    moments_from_s,
    r_coefficients,
    r_s_consistent,
    s_coefficients,
    series_bridge,
    series_compose,
    series_inv,
    series_mul,
    series_reversion,
)


def test_series_helpers():
    a = [F(1), F(2), F(3)]
    b = [F(1), F(-1)]
    assert series_mul(a, b, 3) == [F(1), F(1), F(1), F(-3)]
    inv = series_inv(b, 4)
    assert series_mul(b, inv, 4) == [F(1), F(0), F(0), F(0), F(0)]
    f = [F(0), F(2), F(1)]
    g = series_reversion(f, 5)
    assert series_compose(f, g, 5) == [F(0), F(1), F(0), F(0), F(0), F(0)]


def test_point_mass_bridge():
    br = series_bridge(FormalMomentSeries.point_mass(3, 6))
    assert br["r"] == [F(3), 0, 0, 0, 0, 0]
    assert br["s"] == [F(1, 3), 0, 0, 0, 0, 0]


def test_free_poisson_bridge():
    # moments 1,2,5,14,...: R(w) = 1/(1-w), S(w) = 1/(1+w)
    br = series_bridge(FormalMomentSeries((1, 2, 5, 14, 42, 132)))
    assert br["r"] == [F(1)] * 6
    assert br["s"] == [F(1), F(-1), F(1), F(-1), F(1), F(-1)]
    assert r_s_consistent(br["r"], br["s"], 6)


def test_bridge_roundtrips():
    rng = random.Random(51)
    m = FormalMomentSeries(tuple(F(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(6)))
    assert moments_from_r(r_coefficients(m)).m == m.m
    m1 = FormalMomentSeries((F(2),) + tuple(F(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(5)))
    assert moments_from_s(s_coefficients(m1)).m == m1.m
    br = series_bridge(m1)
    assert r_s_consistent(br["r"], br["s"], 6)


def test_vanishing_first_moment():
    m = FormalMomentSeries((0, 1, 0, 2))
    assert series_bridge(m)["s"] is None
    with pytest.raises(VanishingFirstMoment):
        s_coefficients(m)


def test_free_add_point_masses():
    da = FormalMomentSeries.point_mass(F(2), 5)
    db = FormalMomentSeries.point_mass(F(1, 3), 5)
    assert free_add(da, db).m == FormalMomentSeries.point_mass(F(7, 3), 5).m


def test_free_mult_scaling_and_kreweras():
    mp_m = FormalMomentSeries((1, 2, 5, 14, 42, 132))
    scaled = free_mult(mp_m, FormalMomentSeries.point_mass(2, 6))
    assert scaled.m == tuple(m * F(2) ** k for k, m in enumerate(mp_m.m, start=1))
    ma = FormalMomentSeries((F(1), F(3, 2), F(7, 3), F(4), F(13, 2), F(11)))
    mb = FormalMomentSeries((F(2), F(3), F(5), F(9), F(17), F(33)))
    assert free_mult(ma, mb).m == free_mult_via_kreweras(ma, mb).m


def test_finite_n_bridge_to_free_add():
    # Laguerre-type sequences: p_n = F(-n; b n; n x) has limit S = 1/(z+B+1);
    # moments of p_n (+)_n q_n approach the free additive convolution of the
    # two limit laws at rate O(1/n)
    from finfree.families import s_limit_hyper

    K = 4
    lim_p = s_limit_hyper(A=(), B=(F(1),)).moments(K)
    lim_q = s_limit_hyper(A=(), B=(F(3),)).moments(K)
    target = free_add(lim_p, lim_q)
    errs = []
    for n in (16, 32, 64):
        p = hyper_poly(HypergeometricSpec(n=n, b=(F(n),), scale=F(n)))
        q = hyper_poly(HypergeometricSpec(n=n, b=(F(3 * n),), scale=F(n)))
        conv = add_conv(p, q, n)
        memp = conv.root_moments(K)
        errs.append(max(abs(float(a - b)) / abs(float(b)) for a, b in zip(memp, target.m)))
    assert errs[2] < errs[1] < errs[0]
    assert errs[2] < 0.08  # O(1/n) at n = 64
    assert errs[1] < 0.7 * errs[0] and errs[2] < 0.7 * errs[1]
