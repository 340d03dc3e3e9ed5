"""Multiprecision root extraction and empirical root distributions.

The finder is Aberth-Ehrlich simultaneous iteration in mpmath complex
arithmetic: exact rational coefficients are converted at the working
precision, starting points spread over circles whose radii come from the
Newton polygon of the coefficient magnitudes (so clustered scales are seeded
at their own magnitude), and a precision ladder polishes from a cheap 64-bit
pass up to the requested precision.  Convergence per root uses the Adams
criterion |p(z)| <= eps * sum |c_k| |z|^k, which is the tightest residual a
backward-stable evaluation can certify.

Default precision: 256 bits for degree <= 100, plus 128 bits per additional
100 degrees; the FINFREE_PREC_BITS environment variable overrides it.
"""

import math
import os

import mpmath as mp
import numpy as np

from .errors import (
    DegreeGapTooLarge,
    NonConvergence,
    NonRealRoots,
    ZeroDegree,
)
from .poly import Polynomial


def default_precision(n: int) -> int:
    """Precision schedule in bits, overridable via FINFREE_PREC_BITS."""
    env = os.environ.get("FINFREE_PREC_BITS")
    if env:
        return int(env)
    if n <= 100:
        return 256
    return 256 + 128 * math.ceil((n - 100) / 100)


def _initial_points(coeffs_abs, n):
    """Starting points on Newton-polygon circles (Bini-style).

    coeffs_abs[k] = |monomial coefficient of x^k|; for each edge of the upper
    convex hull of (k, log |c_k|) the corresponding annulus of root magnitudes
    is seeded with equispaced angles and a rotating offset.
    """
    logs = [mp.log(c) if c > 0 else mp.mpf("-inf") for c in coeffs_abs]
    hull = []  # indices on the upper hull, left to right
    for k in range(n + 1):
        if logs[k] == mp.mpf("-inf"):
            continue
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            # keep hull upper-convex: slope(i,j) >= slope(j,k)
            if (logs[j] - logs[i]) * (k - j) <= (logs[k] - logs[j]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(k)
    points = []
    golden = 0.7639320225
    for (i, j) in zip(hull, hull[1:]):
        radius = mp.exp((logs[i] - logs[j]) / (j - i))
        count = j - i
        base = len(points)
        for t in range(count):
            angle = 2 * mp.pi * (t + 0.5 + golden * base) / count + 0.4
            points.append(radius * mp.exp(1j * angle))
    return points


def _aberth_sweeps(coeffs, pts, eps, max_sweeps):
    """Aberth-Ehrlich iteration at the current mpmath precision."""
    n = len(pts)
    dcoeffs = [coeffs[m] * m for m in range(1, n + 1)]
    abs_coeffs = [abs(c) for c in coeffs]
    converged = [False] * n
    for sweep in range(max_sweeps):
        moved = mp.mpf(0)
        for i in range(n):
            if converged[i]:
                continue
            z = pts[i]
            pv = coeffs[n]
            s = abs_coeffs[n]
            az = abs(z)
            for m in range(n - 1, -1, -1):
                pv = pv * z + coeffs[m]
                s = s * az + abs_coeffs[m]
            if abs(pv) <= eps * s:
                converged[i] = True
                continue
            dv = dcoeffs[n - 1]
            for m in range(n - 2, -1, -1):
                dv = dv * z + dcoeffs[m]
            if dv == 0:
                pts[i] = z * (1 + mp.mpf("1e-3")) + mp.mpf("1e-6")
                continue
            newton = pv / dv
            rep = mp.mpc(0)
            for jdx in range(n):
                if jdx != i:
                    dz = z - pts[jdx]
                    if dz != 0:
                        rep += 1 / dz
            denom = 1 - newton * rep
            step = newton if denom == 0 else newton / denom
            pts[i] = z - step
            moved = max(moved, abs(step) / (1 + abs(pts[i])))
        if all(converged):
            return pts, True
        if moved == 0:
            break
    return pts, all(converged)


def find_roots(p: Polynomial, precision_bits: int | None = None):
    """All roots of p as mpmath complex numbers, deterministically.

    Iterates until every root satisfies the Adams residual criterion at the
    working precision (precision_bits + 32 guard bits), climbing a precision
    ladder from 64 bits.  Raises NonConvergence with partial diagnostics if
    the last rung fails to converge.
    """
    mono = p.to_monomial()
    deg = p.degree
    if deg < 1:
        raise ZeroDegree("constant polynomial has no roots to find")
    mono = list(mono[: deg + 1])
    # factor out x^m exactly: m zero roots, then the cofactor
    m = next(i for i, c in enumerate(mono) if c != 0)
    zero_roots = [mp.mpc(0)] * m
    mono = mono[m:]
    deg -= m
    if deg == 0:
        return zero_roots
    prec = default_precision(deg) if precision_bits is None else precision_bits
    target = prec + 32
    base = min(max(64, _conditioning_bits(mono, deg) + 96), target)
    ladder = [target] if base * 4 >= target * 3 else [base, target]
    pts = None
    for level, wp in enumerate(ladder):
        with mp.workprec(wp):
            coeffs = [_coeff_to_mpc(c) for c in mono]
            if pts is None:
                pts = _initial_points([abs(c) for c in coeffs], deg)
            else:
                pts = [mp.mpc(z) for z in pts]
            # stop at the Horner noise floor: n-step evaluation carries ~n ulps
            eps = mp.mpf(4 * deg) * mp.mpf(2) ** (-wp)
            budget = 500 if level == 0 else 120
            pts, ok = _aberth_sweeps(coeffs, pts, eps, budget)
        if level == len(ladder) - 1 and not ok:
            with mp.workprec(wp):
                res = [abs(_horner(coeffs, z)) for z in pts]
            raise NonConvergence("Aberth iteration did not converge", roots=pts, residuals=res)
    return zero_roots + pts


def _coeff_to_mpc(c):
    if hasattr(c, "numerator") and hasattr(c, "denominator"):
        return mp.mpc(mp.mpf(c.numerator) / c.denominator)
    return mp.mpc(c)


def _conditioning_bits(mono, deg):
    """Spread of coefficient magnitudes at the geometric root scale.

    Evaluating p near its roots cancels roughly this many bits, so the base
    rung of the precision ladder must see past it.
    """

    def log2abs(c):
        if hasattr(c, "numerator"):
            if c == 0:
                return None
            return abs(c.numerator).bit_length() - c.denominator.bit_length()
        return math.log2(abs(c)) if c else None

    b = [log2abs(c) for c in mono]
    if b[0] is None or b[deg] is None:
        known = [x for x in b if x is not None]
        return int(max(known) - min(known)) if len(known) > 1 else 0
    log2_r = (b[0] - b[deg]) / deg  # |c_0 / c_n|^(1/deg)
    vals = [bk + k * log2_r for k, bk in enumerate(b) if bk is not None]
    return int(max(vals) - min(vals))


def _horner(coeffs, z):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def is_real_rooted(p: Polynomial, precision_bits=None, tau=1e-20):
    """True iff every root satisfies |Im z| <= tau * (1 + |z|)."""
    rts = find_roots(p, precision_bits)
    margin = max(abs(z.imag) / (1 + abs(z)) for z in rts)
    return float(margin) <= tau, float(margin)


def real_parts_sorted(roots, tau=1e-20):
    """Sorted real parts; raises NonRealRoots if any root is genuinely complex."""
    for z in roots:
        if abs(z.imag) > tau * (1 + abs(z)):
            raise NonRealRoots(f"root {z} has non-negligible imaginary part")
    return sorted(float(z.real) for z in roots)


class EmpiricalDistribution:
    """Zero counting measure: unit mass 1/n at every root (with multiplicity)."""

    def __init__(self, roots):
        self.roots = list(roots)
        self.n = len(self.roots)
        self._cache = {}

    @classmethod
    def from_polynomial(cls, p: Polynomial, precision_bits=None):
        return cls(find_roots(p, precision_bits))

    def moments(self, kmax: int):
        """m_k = (1/n) sum root^k for k = 1..kmax (complex floats)."""
        out = []
        for k in range(1, kmax + 1):
            if k not in self._cache:
                with mp.workprec(96):
                    self._cache[k] = complex(mp.fsum(z**k for z in self.roots) / self.n)
            out.append(self._cache[k])
        return out

    def real_sorted(self, tau=1e-12):
        return real_parts_sorted(self.roots, tau)

    def histogram(self, bins: int, range_=None):
        """Uniform-bin density histogram rows (bin_lo, bin_hi, count, density)."""
        xs = self.real_sorted()
        lo, hi = range_ if range_ is not None else (min(xs), max(xs))
        counts, edges = np.histogram(xs, bins=bins, range=(lo, hi))
        width = edges[1] - edges[0]
        return [
            (float(edges[i]), float(edges[i + 1]), int(counts[i]), float(counts[i] / (self.n * width)))
            for i in range(bins)
        ]

    def ks_distance(self, cdf) -> float:
        """Kolmogorov-Smirnov sup-distance to a model CDF (real spectra only).

        Handles tied roots and atomic model CDFs: at each distinct root the
        empirical CDF is compared on both sides, the lower side against the
        model's left limit.
        """
        xs = self.real_sorted()
        n = len(xs)
        stat = 0.0
        i = 0
        while i < n:
            j = i
            while j < n and xs[j] == xs[i]:
                j += 1
            x = xs[i]
            below = cdf(x - 1e-9 * (1 + abs(x)))
            at = cdf(x)
            stat = max(stat, abs(j / n - float(at)), abs(i / n - float(below)))
            i = j
        return stat


def empirical(p: Polynomial, precision_bits=None) -> EmpiricalDistribution:
    return EmpiricalDistribution.from_polynomial(p, precision_bits)


# -- interlacing verdicts -------------------------------------------------------


class InterlacingVerdict:
    """Outcome of an interlacing comparison between two sorted real spectra."""

    def __init__(self, relation, case, margin):
        self.relation = relation  # "strict", "weak", or "none"
        self.case = case  # "equal-degree" or "degree-drop"
        self.margin = margin

    def __bool__(self):
        return self.relation in ("strict", "weak")

    def __repr__(self):
        return f"InterlacingVerdict({self.relation}, {self.case}, margin={self.margin:g})"


def interlaces(p_roots, q_roots, tau=0.0) -> InterlacingVerdict:
    """Check p <= q in the interlacing order (q's roots between p's).

    Equal length m = n: l1(p) <= l1(q) <= l2(p) <= ... <= ln(p) <= ln(q);
    one shorter: l1(p) <= l1(q) <= l2(p) <= ... <= l_{n-1}(q) <= ln(p).
    tau is an absolute slack for float inputs; the margin reported is the
    worst signed gap (negative = violated).
    """
    p_roots = sorted(float(x) for x in p_roots)
    q_roots = sorted(float(x) for x in q_roots)
    n, m = len(p_roots), len(q_roots)
    if abs(n - m) > 1:
        raise DegreeGapTooLarge(f"cannot interlace lengths {n} and {m}")
    if m == n:
        chain = []
        for i in range(n):
            chain.append(q_roots[i] - p_roots[i])
            if i + 1 < n:
                chain.append(p_roots[i + 1] - q_roots[i])
        case = "equal-degree"
    elif m == n - 1:
        chain = []
        for i in range(m):
            chain.append(q_roots[i] - p_roots[i])
            chain.append(p_roots[i + 1] - q_roots[i])
        case = "degree-drop"
    else:  # m == n + 1: q has more roots; p cannot be interlaced by q this way
        return InterlacingVerdict("none", "degree-drop", float("-inf"))
    margin = min(chain) if chain else 0.0
    if margin > 0:
        return InterlacingVerdict("strict", case, margin)
    if margin >= -tau:
        return InterlacingVerdict("weak", case, margin)
    return InterlacingVerdict("none", case, margin)
