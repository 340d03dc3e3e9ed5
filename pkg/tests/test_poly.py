import json
import random
from fractions import Fraction as F

import mpmath as mp
import pytest

from finfree.errors import FloatBackendRejected, ZeroDilation, ZeroLeading
from finfree.poly import Polynomial


def rand_poly(rng, n):
    return Polynomial.from_roots([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)])


def test_e_convention():
    p = Polynomial.from_monomial([2, -3, 1])  # (x-1)(x-2)
    assert p.e == (F(1), F(3), F(2))
    assert p.monic and p.degree == 2 and p.exact


def test_dilate_examples():
    p = Polynomial.from_monomial([2, -3, 1])
    assert p.dilate(1) == p
    # dilate(x-1, 2) = 2((x/2) - 1) = x - 2
    assert Polynomial.from_monomial([-1, 1]).dilate(2).to_monomial() == (F(-2), F(1))
    with pytest.raises(ZeroDilation):
        p.dilate(0)


def test_dilate_composition_random():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(1, 6)
        p = rand_poly(rng, n)
        a, b = F(2), F(3)
        assert p.dilate(a).dilate(b) == p.dilate(a * b)


def test_shift_examples():
    x2 = Polynomial.from_monomial([0, 0, 1])
    assert x2.shift(1).to_monomial() == (F(1), F(-2), F(1))
    p = Polynomial.from_monomial([2, -3, 1])
    assert p.shift(0) == p
    assert p.shift(-1).to_monomial() == (F(0), F(-1), F(1))  # x^2 - x


def test_reverse_examples():
    p = Polynomial.from_monomial([2, -3, 1])
    assert p.reverse().to_monomial() == (F(1), F(-3), F(2))  # 2x^2-3x+1 reversed order
    rng = random.Random(2)
    for _ in range(10):
        q = rand_poly(rng, rng.randint(1, 6))
        if q.coeff(0) != 0:
            assert q.reverse().reverse() == q
    # roots map t -> 1/t
    xn = Polynomial.from_roots([F(2), F(-3), F(1, 5)])
    rev = xn.reverse()
    for r in (F(1, 2), F(-1, 3), F(5)):
        assert rev.evaluate(r) == 0


def test_evaluate():
    p = Polynomial.from_monomial([2, -3, 1])
    assert p.evaluate(F(1)) == 0
    assert p.evaluate(F(0)) == 2
    assert p.evaluate(complex(0, 1)) == complex(1, -3)


def test_shift_evaluate_consistency_exact_and_float():
    rng = random.Random(3)
    p = rand_poly(rng, 5)
    a = F(7, 3)
    for x in (F(1, 2), F(-4), F(9, 7)):
        assert p.shift(a).evaluate(x) == p.evaluate(x - a)
    # float backend at given precision: relative error within 2^(-prec+10)
    with mp.workprec(128):
        x = mp.mpf(3) / 7
        lhs = p.shift(a).evaluate(x)
        rhs = p.evaluate(x - mp.mpf(7) / 3)
        assert abs(lhs - rhs) <= mp.mpf(2) ** (-118) * (1 + abs(rhs))


def test_power_sums_newton_identities():
    rng = random.Random(4)
    for _ in range(10):
        n = rng.randint(1, 8)
        roots = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
        p = Polynomial.from_roots(roots)
        for k in range(1, 5):
            assert p.power_sums(k)[-1] == sum(r**k for r in roots)
    assert Polynomial.from_monomial([2, -3, 1]).root_moments(2) == [F(3, 2), F(5, 2)]
    # point mass: m_k = c^k
    pm = Polynomial.from_roots([F(5, 3)] * 4)
    assert pm.root_moments(3) == [F(5, 3), F(25, 9), F(125, 27)]


def test_json_roundtrip_bit_exact():
    rng = random.Random(5)
    p = rand_poly(rng, 6).scaled(F(22, 7))
    text = p.to_json()
    obj = json.loads(text)
    assert all("." not in s for s in obj["e"])  # decimal-free rational strings
    assert Polynomial.from_json(text) == p


def test_float_backend_flag_and_json_rejection():
    q = Polynomial(2, [1.0, 2.0, 3.0])
    assert not q.exact
    with pytest.raises(FloatBackendRejected):
        q.to_json()


def test_ambient_degree_bookkeeping():
    p = Polynomial.from_monomial([1, 1], n=4)  # x + 1 in ambient degree 4
    assert p.n == 4 and p.degree == 1
    with pytest.raises(ZeroLeading):
        p.monicized()


def test_divide_linear():
    p = Polynomial.from_roots([F(1), F(1), F(2)])
    q = p.divide_linear(F(1))
    assert q.to_monomial() == Polynomial.from_roots([F(1), F(2)]).to_monomial()
    with pytest.raises(ValueError):
        p.divide_linear(F(5))
