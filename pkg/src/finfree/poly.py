"""Polynomials in the signed elementary-symmetric coefficient convention.

A polynomial of ambient degree n is stored through the n+1 numbers e_0..e_n
with

    p(x) = sum_{j=0}^{n} x^{n-j} (-1)^j e_j.

For a monic p with roots l_1..l_n, e_j is the j-th elementary symmetric
polynomial of the roots.  Both finite free convolutions are native in this
convention, which is why it is the canonical form; converters to and from
the ordinary monomial basis are lossless.

Coefficients are exact rationals (fractions.Fraction) by default.  Floats /
mpmath values are tolerated for evaluation-style work, but any operation that
must be exact checks `Polynomial.exact` and refuses float inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb

from .errors import FloatBackendRejected, ZeroDilation, ZeroLeading

_EXACT_TYPES = (int, Fraction)


def _as_coeff(x):
    """Normalize ints to Fraction; pass anything else through unchanged."""
    if isinstance(x, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(x, int):
        return Fraction(x)
    return x


class Polynomial:
    """Immutable dense polynomial with an explicit ambient degree n.

    The ambient degree can exceed the actual degree (leading e_j may vanish);
    the convolutions are defined relative to the ambient degree, so it is part
    of the value.
    """

    __slots__ = ("n", "e")

    def __init__(self, n, coeffs_e):
        coeffs_e = tuple(_as_coeff(c) for c in coeffs_e)
        if n < 0:
            raise ValueError("ambient degree must be nonnegative")
        if len(coeffs_e) != n + 1:
            raise ValueError(f"need exactly n+1={n + 1} coefficients, got {len(coeffs_e)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "e", coeffs_e)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_monomial(cls, coeffs, n=None):
        """Build from monomial coefficients c_0..c_m (ascending powers)."""
        coeffs = [_as_coeff(c) for c in coeffs]
        if n is None:
            n = len(coeffs) - 1
        if len(coeffs) - 1 > n:
            raise ValueError("more coefficients than ambient degree allows")
        coeffs = coeffs + [Fraction(0)] * (n + 1 - len(coeffs))
        e = [(-1) ** j * coeffs[n - j] for j in range(n + 1)]
        return cls(n, e)

    @classmethod
    def from_roots(cls, roots, n=None, leading=1):
        """Monic-times-`leading` polynomial with the given roots, exactly."""
        roots = [_as_coeff(r) for r in roots]
        if n is None:
            n = len(roots)
        if len(roots) > n:
            raise ValueError("more roots than ambient degree")
        mono = [_as_coeff(leading)]
        for r in roots:
            nxt = [mono[0] * (-r)]
            for k in range(1, len(mono)):
                nxt.append(mono[k] * (-r) + mono[k - 1])
            nxt.append(mono[-1])
            mono = nxt
        return cls.from_monomial(mono, n)

    @classmethod
    def linear_power(cls, alpha, n):
        """(x - alpha)^n in ambient degree n; e_j = C(n,j) alpha^j."""
        a = _as_coeff(alpha)
        return cls(n, [comb(n, j) * a**j for j in range(n + 1)])

    @classmethod
    def zero(cls, n):
        return cls(n, [Fraction(0)] * (n + 1))

    @classmethod
    def x_power(cls, n):
        """x^n, i.e. e_0 = 1 and all other e_j = 0."""
        return cls(n, [Fraction(1)] + [Fraction(0)] * n)

    # -- basic structure -----------------------------------------------------

    @property
    def exact(self):
        return all(isinstance(c, _EXACT_TYPES) for c in self.e)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.e)

    @property
    def degree(self):
        """Actual degree, or -1 for the zero polynomial."""
        for j in range(self.n + 1):
            if self.e[j] != 0:
                return self.n - j
        return -1

    @property
    def monic(self):
        return self.e[0] == 1

    def to_monomial(self):
        """Coefficients c_0..c_n of ascending powers."""
        n = self.n
        return tuple((-1) ** (n - m) * self.e[n - m] for m in range(n + 1))

    def coeff(self, m):
        """Monomial coefficient of x^m."""
        return (-1) ** (self.n - m) * self.e[self.n - m]

    # -- elementary transforms ------------------------------------------------

    def dilate(self, alpha):
        """alpha^n * p(x/alpha); roots scale by alpha; e_j -> alpha^j e_j."""
        a = _as_coeff(alpha)
        if a == 0:
            raise ZeroDilation("dilation scale must be nonzero")
        return Polynomial(self.n, [a**j * c for j, c in enumerate(self.e)])

    def shift(self, alpha):
        """p(x - alpha), expanded exactly (Taylor shift)."""
        a = _as_coeff(alpha)
        if a == 0:
            return self
        mono = list(self.to_monomial())
        n = self.n
        out = [Fraction(0)] * (n + 1)
        for m in range(n, -1, -1):
            c = mono[m]
            if c == 0:
                continue
            # (x - a)^m
            t = c
            for k in range(m, -1, -1):
                out[k] += t * comb(m, k) * (-a) ** (m - k)
        return Polynomial.from_monomial(out, n)

    def reverse(self):
        """Reversed polynomial p*(x) = x^n p(1/x); roots map t -> 1/t."""
        mono = self.to_monomial()
        return Polynomial.from_monomial(list(reversed(mono)), self.n)

    def derivative(self):
        """d/dx p, with ambient degree n-1."""
        if self.n == 0:
            return Polynomial(0, [Fraction(0)])
        mono = self.to_monomial()
        return Polynomial.from_monomial([m * mono[m] for m in range(1, self.n + 1)], self.n - 1)

    def evaluate(self, x):
        """Horner evaluation; works for Fraction, float, complex, mpmath."""
        mono = self.to_monomial()
        acc = mono[-1] * (x * 0 + 1) if not isinstance(x, _EXACT_TYPES) else mono[-1]
        for m in range(self.n - 1, -1, -1):
            acc = acc * x + mono[m]
        return acc

    # -- arithmetic ------------------------------------------------------------

    def scaled(self, c):
        """c * p, same ambient degree."""
        c = _as_coeff(c)
        return Polynomial(self.n, [c * v for v in self.e])

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("ambient degrees differ")
        return Polynomial(self.n, [a + b for a, b in zip(self.e, other.e)])

    def __sub__(self, other):
        if self.n != other.n:
            raise ValueError("ambient degrees differ")
        return Polynomial(self.n, [a - b for a, b in zip(self.e, other.e)])

    def mul(self, other):
        """Plain polynomial product; ambient degrees add."""
        a, b = self.to_monomial(), other.to_monomial()
        out = [Fraction(0)] * (self.n + other.n + 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb != 0:
                    out[i + j] += ca * cb
        return Polynomial.from_monomial(out, self.n + other.n)

    def divide_linear(self, root):
        """Exact division by (x - root); raises if the remainder is nonzero."""
        mono = list(self.to_monomial())
        n = self.n
        q = [Fraction(0)] * n
        acc = mono[n]
        for m in range(n - 1, -1, -1):
            q[m] = acc
            acc = mono[m] + acc * _as_coeff(root)
        if acc != 0:
            raise ValueError(f"nonzero remainder {acc} dividing by (x - {root})")
        return Polynomial.from_monomial(q, n - 1)

    def monicized(self):
        """p / e_0; requires full ambient degree."""
        if self.e[0] == 0:
            raise ZeroLeading("cannot monicize: leading coefficient vanishes")
        c = self.e[0]
        return Polynomial(self.n, [v / c for v in self.e])

    def normalized_constant(self):
        """p scaled so that p(0) = 1; requires p(0) != 0."""
        c0 = self.coeff(0)
        if c0 == 0:
            raise ZeroLeading("constant term vanishes")
        return self.scaled(Fraction(1) / c0 if isinstance(c0, _EXACT_TYPES) else 1 / c0)

    # -- comparisons -------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.n == other.n and self.e == other.e

    def __hash__(self):
        return hash((self.n, self.e))

    def proportional_to(self, other):
        """Return scalar c with self == c * other, or None if not proportional."""
        if self.n != other.n:
            return None
        c = None
        for a, b in zip(self.e, other.e):
            if b == 0:
                if a != 0:
                    return None
                continue
            r = Fraction(a, 1) / b if isinstance(a, _EXACT_TYPES) and isinstance(b, _EXACT_TYPES) else a / b
            if c is None:
                c = r
            elif r != c:
                return None
        if c is None or c == 0:
            return None
        return c

    def __repr__(self):
        return f"Polynomial(n={self.n}, e={list(self.e)})"

    # -- moments from coefficients --------------------------------------------------

    def power_sums(self, kmax):
        """Power sums p_k = sum lambda_i^k for k = 1..kmax via Newton's identities.

        Requires full ambient degree (e_0 != 0); exact in the rational backend.
        """
        if self.e[0] == 0:
            raise ZeroLeading("power sums need e_0 != 0")
        n = self.n
        sig = [c / self.e[0] for c in self.e]  # sigma_j of the root multiset
        ps = []
        for k in range(1, kmax + 1):
            acc = (-1) ** (k - 1) * k * (sig[k] if k <= n else 0)
            for i in range(1, k):
                if i <= n:
                    acc += (-1) ** (i - 1) * sig[i] * ps[k - i - 1]
            ps.append(acc)
        return ps

    def root_moments(self, kmax):
        """Normalized moments m_k = (1/n) sum lambda^k, k = 1..kmax, exactly."""
        return [p / self.n for p in self.power_sums(kmax)]

    # -- JSON wire format ---------------------------------------------------------

    def to_json(self):
        """{"n": int, "e": ["p/q", ...]} with decimal-free rational strings."""
        if not self.exact:
            raise FloatBackendRejected("JSON literals are exact; convert float-backend values first")
        return json.dumps({"n": self.n, "e": [str(Fraction(c)) for c in self.e]})

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(int(obj["n"]), [Fraction(s) for s in obj["e"]])
