import random
from fractions import Fraction as F

import mpmath as mp
import pytest

from finfree.errors import DegreeGapTooLarge, NonRealRoots
from finfree.hyper import HypergeometricSpec, hyper_poly
from finfree.poly import Polynomial
from finfree.roots import (
    EmpiricalDistribution,
    default_precision,
    empirical,
    find_roots,
    interlaces,
    is_real_rooted,
    real_parts_sorted,
)


def test_factored_quadratic():
    rts = sorted(float(z.real) for z in find_roots(Polynomial.from_monomial([2, -3, 1]), 128))
    assert rts == pytest.approx([1.0, 2.0], abs=1e-30)


def test_laguerre_quadratic_roots():
    p = hyper_poly(HypergeometricSpec(n=2, b=(1,)))  # 1 - 2x + x^2/2
    rts = sorted(float(z.real) for z in find_roots(p, 128))
    assert rts == pytest.approx([2 - 2**0.5, 2 + 2**0.5], abs=1e-14)


def test_multiple_root_cluster():
    rts = find_roots(Polynomial.from_roots([1, 1, 1, 1]), 192)
    assert max(float(abs(z - 1)) for z in rts) < 1e-12


def test_zero_roots_and_cofactor():
    p = Polynomial.from_roots([0, 0, F(1, 3), 5])
    rts = sorted(float(z.real) for z in find_roots(p, 128))
    assert rts == pytest.approx([0.0, 0.0, 1 / 3, 5.0], abs=1e-25)


def test_wide_dynamic_range():
    p = Polynomial.from_roots([F(1, 10**6), F(1, 1000), 1, 1000])
    rts = sorted(float(z.real) for z in find_roots(p, 128))
    assert rts == pytest.approx([1e-6, 1e-3, 1.0, 1e3], rel=1e-20)


def test_conjugate_symmetry():
    p = Polynomial.from_monomial([5, 1, -2, 1, 1])
    with mp.workprec(200):
        rts = find_roots(p, 160)
        for z in rts:
            conj = mp.conj(z)
            assert min(abs(conj - w) for w in rts) < mp.mpf(2) ** -150


def test_default_precision_schedule(monkeypatch):
    assert default_precision(50) == 256
    assert default_precision(100) == 256
    assert default_precision(101) == 384
    assert default_precision(299) == 512
    assert default_precision(900) == 1280
    monkeypatch.setenv("FINFREE_PREC_BITS", "777")
    assert default_precision(900) == 777


def test_stability_under_precision_doubling():
    p = hyper_poly(HypergeometricSpec(n=12, a=(F(36),), b=(F(3, 2),)))
    key = lambda z: (float(z.real), float(z.imag))
    r1 = sorted(find_roots(p, 128), key=key)
    r2 = sorted(find_roots(p, 256), key=key)
    assert max(float(abs(a - b)) for a, b in zip(r1, r2)) < 2**-64


def test_is_real_rooted():
    assert not is_real_rooted(Polynomial.from_monomial([1, 0, 1]), 128, 1e-10)[0]
    ok, margin = is_real_rooted(
        hyper_poly(HypergeometricSpec(n=4, a=(10,), b=(F(1, 2),))), 192, 1e-20
    )
    assert ok and margin < 1e-40
    # (x-1)^2 (x^2 + 1e-30): tiny imaginary pair well above the scaled tau
    tiny = Polynomial.from_monomial([F(1, 10**30), 0, 1]).mul(Polynomial.from_roots([1, 1]))
    ok, margin = is_real_rooted(tiny, 256, tau=1e-20)
    assert not ok and margin > 1e-16


def test_moments_match_newton_identities():
    rng = random.Random(41)
    for n in (4, 7, 10):
        roots = [F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(n)]
        p = Polynomial.from_roots(roots)
        dist = empirical(p, 192)
        newton = [float(x) for x in p.root_moments(4)]
        numeric = [z.real for z in dist.moments(4)]
        for a, b in zip(newton, numeric):
            assert abs(a - b) < 1e-12 * (1 + abs(a))


def test_interlacing_verdicts():
    assert interlaces([1, 3], [2]).case == "degree-drop"
    assert interlaces([1, 3], [2]).relation == "strict"
    assert interlaces([1, 3], [2, 4]).case == "equal-degree"
    assert bool(interlaces([1, 3], [2, 4]))
    assert interlaces([1, 4], [2, 3]).relation == "none"
    assert interlaces([1, 2], [2, 3], tau=0).relation == "weak"
    with pytest.raises(DegreeGapTooLarge):
        interlaces([1, 2, 3, 4], [1, 2])


def test_histogram_and_ks():
    dist = EmpiricalDistribution([mp.mpc(k, 0) / 10 for k in range(1, 11)])
    rows = dist.histogram(5, range_=(0.0, 1.0))
    assert len(rows) == 5
    assert sum(r[2] for r in rows) == 10
    # density columns integrate to one
    total = sum((r[1] - r[0]) * r[3] for r in rows)
    assert total == pytest.approx(1.0)
    uniform_cdf = lambda x: min(max(x, 0.0), 1.0)
    assert dist.ks_distance(uniform_cdf) <= 0.1 + 1e-12  # bounded by 1/n
    # point mass against its own cdf: within 1/n of zero
    pm = EmpiricalDistribution([mp.mpc(2, 0)] * 8)
    assert pm.ks_distance(lambda x: 1.0 if x >= 2 else 0.0) <= 1 / 8 + 1e-12


def test_ks_requires_real_spectrum():
    dist = EmpiricalDistribution([mp.mpc(0, 1), mp.mpc(0, -1)])
    with pytest.raises(NonRealRoots):
        dist.ks_distance(lambda x: 0.5)


def test_real_parts_sorted_guard():
    with pytest.raises(NonRealRoots):
        real_parts_sorted([mp.mpc(1, 0.5)], tau=1e-8)
