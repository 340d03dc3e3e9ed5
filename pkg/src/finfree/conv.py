"""The two finite free convolutions on degree-n polynomials.

Multiplicative:  e_k(p (x)_n q) = C(n,k)^{-1} e_k(p) e_k(q)
Additive:        e_k(p (+)_n q) = n^(k)_falling * sum_{i+j=k} e_i(p)/n^(i) * e_j(q)/n^(j)

Both are defined relative to the shared ambient degree n and require exact
rational coefficients: the binomial ratio amplifies float error by
C(n, n/2), so float-backend inputs are rejected outright.
"""

from fractions import Fraction
from math import comb

from .errors import DegreeMismatch, FloatBackendRejected
from .poly import Polynomial


def _falling(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _check(p, q, n):
    if p.n != n or q.n != n:
        raise DegreeMismatch(f"ambient degrees ({p.n}, {q.n}) do not match n={n}")
    if not (p.exact and q.exact):
        raise FloatBackendRejected("convolutions require exact rational coefficients")


def mult_conv(p: Polynomial, q: Polynomial, n: int) -> Polynomial:
    """n-th multiplicative finite free convolution of p and q."""
    _check(p, q, n)
    e = [Fraction(p.e[k] * q.e[k], comb(n, k)) for k in range(n + 1)]
    return Polynomial(n, e)


def add_conv(p: Polynomial, q: Polynomial, n: int) -> Polynomial:
    """n-th additive finite free convolution of p and q.

    Returns the zero polynomial of ambient degree n when deg p + deg q < n
    (that is the exact vanishing locus of the operation).
    """
    _check(p, q, n)
    ep = [Fraction(p.e[i], _falling(n, i)) for i in range(n + 1)]
    eq = [Fraction(q.e[j], _falling(n, j)) for j in range(n + 1)]
    e = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ep[i] and eq[k - i]:
                s += ep[i] * eq[k - i]
        e.append(_falling(n, k) * s)
    return Polynomial(n, e)


def check_identity_dilation_distribute(p, q, n, alpha) -> bool:
    """(Dil_a p) (x)_n q == p (x)_n (Dil_a q) == Dil_a (p (x)_n q), exactly."""
    a = Fraction(alpha)
    lhs = mult_conv(p.dilate(a), q, n)
    mid = mult_conv(p, q.dilate(a), n)
    rhs = mult_conv(p, q, n).dilate(a)
    return lhs == mid == rhs


def check_identity_dilation_additive(p, q, n, alpha) -> bool:
    """(Dil_a p) (+)_n (Dil_a q) is proportional to Dil_a (p (+)_n q)."""
    a = Fraction(alpha)
    lhs = add_conv(p.dilate(a), q.dilate(a), n)
    rhs = add_conv(p, q, n).dilate(a)
    if lhs.is_zero and rhs.is_zero:
        return True
    return lhs.proportional_to(rhs) is not None
