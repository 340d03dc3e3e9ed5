"""Algebraic Cauchy-transform curves: series moments, branches, densities.

A curve is a bivariate polynomial relation F(y, u) = 0 satisfied by
y = u * G(u), where G is the Cauchy transform of a limit measure.  The
physical branch is the one with y -> 1 as u -> infinity (G ~ 1/u).  Three
consumers share it:

* moments_from_curve     -- expand y = 1 + m_1/u + m_2/u^2 + ... formally;
* solve_curve_branch     -- numeric continuation of the branch over a grid;
* stieltjes_density      -- boundary values y(x + i eps) and the
                            Sokhotski-Plemelj recovery of the density.
"""

from fractions import Fraction

import numpy as np

from .errors import BranchDegenerate, BranchJump, NegativeDensity
from .series import FormalMomentSeries, series_mul, series_trim


class AlgebraicCurve:
    """F(y, u) = sum coeffs[(i, j)] y^i u^j with exact rational coefficients."""

    def __init__(self, coeffs):
        self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v != 0}
        if not self.coeffs:
            raise ValueError("zero curve")
        self.deg_y = max(i for i, _ in self.coeffs)
        self.deg_u = max(j for _, j in self.coeffs)
        self._float = [(i, j, float(c)) for (i, j), c in sorted(self.coeffs.items())]

    def __call__(self, y, u):
        return sum(c * y**i * u**j for i, j, c in self._float)

    def dy(self, y, u):
        return sum(c * i * y ** (i - 1) * u**j for i, j, c in self._float if i >= 1)

    def y_poly_at(self, u):
        """Monomial coefficients in y (descending, numpy.roots order) at fixed u."""
        out = [0j] * (self.deg_y + 1)
        for i, j, c in self._float:
            out[self.deg_y - i] += c * u**j
        return out

    def __repr__(self):
        return f"AlgebraicCurve({dict(sorted(self.coeffs.items()))})"


# -- bivariate polynomial helpers (dict {(i, j): Fraction}) ---------------------


def biv_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return out


def biv_mul(a, b):
    out = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, Fraction(0)) + v1 * v2
    return out


def biv_scale(a, c):
    c = Fraction(c)
    return {k: c * v for k, v in a.items()}


def y_plus(c):
    """The factor (y + c)."""
    return {(1, 0): Fraction(1), (0, 0): Fraction(c)}


def curve_from_limits(A, B) -> AlgebraicCurve:
    """y * prod(y + B_j) - u (y - 1) * prod(y + A_i) = 0."""
    lhs = {(1, 0): Fraction(1)}
    for bj in B:
        lhs = biv_mul(lhs, y_plus(bj))
    rhs = {(1, 1): Fraction(1), (0, 1): Fraction(-1)}  # u (y - 1)
    for ai in A:
        rhs = biv_mul(rhs, y_plus(ai))
    return AlgebraicCurve(biv_add(lhs, biv_scale(rhs, -1)))


def curve_shifted(A, B, c, d):
    """Implicit S-transform relation for the affinely mapped argument.

    Returns the bivariate polynomial P(w, u) = 0 satisfied by w = S(u) when
    the hypergeometric argument is mapped x -> c x + d:

        w prod_j [d u w + c(u+1+B_j)] = c^(t-s) (d w + c) prod_i [d u w + c(u+1+A_i)].

    Encoded as {(i, j): coeff} with i the power of w and j the power of u.
    """
    from .errors import ZeroScale

    c = Fraction(c)
    d = Fraction(d)
    if c == 0:
        raise ZeroScale("affine scale c must be nonzero")
    s, t = len(A), len(B)

    def bracket(const):
        # d u w + c(u + 1 + const) in variables (w, u)
        return {
            (1, 1): d,
            (0, 1): c,
            (0, 0): c * (1 + Fraction(const)),
        }

    lhs = {(1, 0): Fraction(1)}
    for bj in B:
        lhs = biv_mul(lhs, bracket(bj))
    rhs = {(1, 0): d, (0, 0): c}
    for ai in A:
        rhs = biv_mul(rhs, bracket(ai))
    rhs = biv_scale(rhs, Fraction(c) ** (t - s))
    out = biv_add(lhs, biv_scale(rhs, -1))
    return {k: v for k, v in out.items() if v != 0}


# -- formal moments from the physical branch -------------------------------------


def _v_side_coeffs(curve: AlgebraicCurve):
    """Substitute u = 1/v, clear v powers, strip the overall v-content.

    Returns a dict {(i, k): coeff} for G(y, v) = sum coeff y^i v^k with the
    physical point at (y, v) = (1, 0).
    """
    d = curve.deg_u
    g = {(i, d - j): c for (i, j), c in curve.coeffs.items()}
    shift = min(k for _, k in g)
    return {(i, k - shift): c for (i, k), c in g.items()}


def newton_series_branch(g, y0, K):
    """Series solution y(v) = y0 + O(v) of G(y, v) = 0, G given as a dict.

    G = sum g[(i, k)] y^i v^k must have a simple root at (y0, 0); solved by
    Newton iteration in the truncated power series ring.
    """
    y0 = Fraction(y0)
    slice0 = {}
    for (i, k), c in g.items():
        if k == 0:
            slice0[i] = slice0.get(i, Fraction(0)) + c
    val = sum(c * y0**i for i, c in slice0.items())
    der = sum(i * c * y0 ** (i - 1) for i, c in slice0.items() if i >= 1)
    if val != 0 or der == 0:
        raise BranchDegenerate(f"branch not simple at (y={y0}, v=0): G={val}, G_y={der}")
    max_i = max(i for i, _ in g)

    def eval_g_and_dy(yser):
        powers = [[Fraction(1)] + [Fraction(0)] * K]
        for _ in range(max_i):
            powers.append(series_mul(powers[-1], yser, K))
        total = [Fraction(0)] * (K + 1)
        dtotal = [Fraction(0)] * (K + 1)
        for (i, k), c in g.items():
            if k > K:
                continue
            for idx in range(0, K + 1 - k):
                total[idx + k] += c * powers[i][idx]
                if i >= 1:
                    dtotal[idx + k] += c * i * powers[i - 1][idx]
        return total, dtotal

    y = [y0] + [Fraction(0)] * K
    for _ in range(K + 2):
        gv, gd = eval_g_and_dy(y)
        if all(c == 0 for c in gv):
            break
        inv = _series_inv_nonzero(gd, K)
        step = series_mul(gv, inv, K)
        y = [a - b for a, b in zip(y, step)]
    gv, _ = eval_g_and_dy(y)
    if any(c != 0 for c in gv):
        raise BranchDegenerate("series Newton failed to close the curve equation")
    return y


def moments_from_curve(curve: AlgebraicCurve, K: int) -> FormalMomentSeries:
    """m_1..m_K from F(y, u) = 0 with y = 1 + m_1/u + m_2/u^2 + ...

    Expands the physical branch at infinity (v = 1/u); raises
    BranchDegenerate unless y = 1 is a simple root of the v = 0 slice.
    """
    y = newton_series_branch(_v_side_coeffs(curve), 1, K)
    return FormalMomentSeries(tuple(y[1 : K + 1]))


def branch_mass_candidates(curve: AlgebraicCurve):
    """Possible values of y at u = infinity: the total masses of branches.

    The physical probability branch has mass 1; in flagged escape-to-infinity
    regimes (a numerator limit inside (-1, 0)) the surviving branch carries
    mass |A| < 1, which shows up here as another real slice root.
    """
    g = _v_side_coeffs(curve)
    slice0 = {}
    for (i, k), c in g.items():
        if k == 0:
            slice0[i] = slice0.get(i, Fraction(0)) + c
    coeffs = [0.0] * (max(slice0) + 1)
    for i, c in slice0.items():
        coeffs[i] = float(c)
    arr = np.trim_zeros(np.array(coeffs[::-1]), "f")
    roots = np.roots(arr)
    return sorted({round(r.real, 12) for r in roots if abs(r.imag) < 1e-9})


def mass_branch_moments(curve: AlgebraicCurve, y0, K: int):
    """Moment expansion of the branch with y -> y0 at infinity (mass y0)."""
    y = newton_series_branch(_v_side_coeffs(curve), y0, K)
    return y[0], y[1 : K + 1]


def reciprocal_moments_from_curve(curve: AlgebraicCurve, K: int):
    """Moments of the reciprocal-root measure: m_k(mu*) = m_{-k}(mu).

    Expands the branch of y = u G(u) vanishing at u = 0, which exists and is
    simple exactly when 0 is outside the support; then
    y(u) = -sum_{k>=1} m_{-k} u^k.
    """
    g = dict(curve.coeffs)  # already in (y, u) powers; expand around u = 0
    y = newton_series_branch(g, 0, K)
    return [-c for c in y[1 : K + 1]]


def _series_inv_nonzero(a, K):
    a = series_trim(a, K)
    if a[0] == 0:
        raise BranchDegenerate("derivative series vanishes at the expansion point")
    out = [Fraction(1) / a[0]]
    for k in range(1, K + 1):
        acc = sum((a[i] * out[k - i] for i in range(1, k + 1)), start=Fraction(0))
        out.append(-acc / a[0])
    return out


# -- numeric branch tracking -------------------------------------------------------


def _newton_point(curve, u, y0, tol=1e-13, maxiter=60):
    y = complex(y0)
    for _ in range(maxiter):
        f = curve(y, u)
        df = curve.dy(y, u)
        if df == 0:
            return None
        step = f / df
        y -= step
        if abs(step) <= tol * (1 + abs(y)):
            return y
    return None


def _continue_to(curve, u_from, y_from, u_to, jump_tol=0.5, min_step=1e-12):
    """Walk the branch from (u_from, y_from) to u_to with adaptive steps."""
    u_cur, y_cur = complex(u_from), complex(y_from)
    u_to = complex(u_to)
    frac = 1.0
    while u_cur != u_to:
        u_next = u_to if frac >= 1.0 else u_cur + frac * (u_to - u_cur)
        y_next = _newton_point(curve, u_next, y_cur)
        if y_next is None or abs(y_next - y_cur) > jump_tol * (1 + abs(y_cur)):
            frac /= 2
            if frac < min_step:
                raise BranchJump(f"continuation stalled near u={u_next}")
            continue
        u_cur, y_cur = u_next, y_next
        frac = min(1.0, frac * 2)
    return y_cur


def _far_start(curve, u_scale):
    """A reliable far-field seed on the physical branch."""
    R = 64.0 * max(1.0, u_scale)
    try:
        m1 = float(moments_from_curve(curve, 1).m[0])
    except BranchDegenerate:
        m1 = 0.0
    for radius in (R, 4 * R, 16 * R, 256 * R):
        u0 = complex(0.0, radius)
        y0 = _newton_point(curve, u0, 1.0 + m1 / u0)
        if y0 is not None and abs(y0 - 1.0) < 0.5:
            return u0, y0
    raise BranchJump("could not seed the physical branch at infinity")


def solve_curve_branch(curve: AlgebraicCurve, u_grid):
    """Physical-branch values y(u) along a grid, by homotopy continuation.

    The grid is followed in the given order; the first point is reached from
    a far-field seed with y ~ 1.  Raises BranchJump when continuation cannot
    cross a discriminant neighborhood.
    """
    u_grid = [complex(u) for u in u_grid]
    if not u_grid:
        return []
    scale = max(abs(u) for u in u_grid)
    u_cur, y_cur = _far_start(curve, scale)
    out = []
    for u in u_grid:
        y_cur = _continue_to(curve, u_cur, y_cur, u)
        u_cur = u
        out.append(y_cur)
    return out


def stieltjes_density(curve: AlgebraicCurve, xs, eps_schedule=(1e-3, 5e-4), polish=True):
    """Density of the limit measure on a real grid via Sokhotski-Plemelj.

    density(x) = -Im y(x + i0) / (pi x), evaluated with the eps-schedule and
    Richardson extrapolation, then (optionally) polished by a Newton solve
    directly on the real axis seeded from the extrapolated value.

    The grid must avoid x = 0 and support endpoints; raises NegativeDensity
    when the recovered density dips below -1e-8 (branch selection error).
    """
    xs = [float(x) for x in xs]
    if any(x == 0 for x in xs):
        raise ValueError("grid must avoid x = 0")
    eps1, eps2 = sorted(eps_schedule, reverse=True)[:2]
    vals = {}
    for eps in (eps1, eps2):
        ys = solve_curve_branch(curve, [x + 1j * eps for x in xs])
        vals[eps] = ys
    out = []
    for i, x in enumerate(xs):
        y1, y2 = vals[eps1][i], vals[eps2][i]
        d1 = -(y1.imag) / (np.pi * x)
        d2 = -(y2.imag) / (np.pi * x)
        # eliminate the O(eps) term: with eps2 = eps1/2 this is 2 d2 - d1
        w = eps1 / (eps1 - eps2)
        dens = w * d2 - (w - 1) * d1
        if polish:
            y0 = _newton_point(curve, complex(x), vals[eps2][i])
            if y0 is not None and abs(y0.imag) > 1e-12:
                cand = -(y0.imag) / (np.pi * x)
                if abs(cand - dens) < 0.1 * (1 + abs(dens)):
                    dens = cand
        if dens < -1e-8:
            raise NegativeDensity(f"density {dens} < 0 at x={x}")
        out.append(dens)
    return np.asarray(out)


# -- discriminant-based support candidates ----------------------------------------


def _upoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _upoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _upoly_add(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x + y for x, y in zip(a, b)]


def _det_poly_matrix(m):
    """Determinant of a matrix with univariate-polynomial entries (cofactors)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    out = [Fraction(0)]
    for j in range(n):
        if all(c == 0 for c in m[0][j]):
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
        term = _upoly_mul(m[0][j], _det_poly_matrix(minor))
        if j % 2:
            term = [-c for c in term]
        out = _upoly_add(out, term)
    return out


def y_discriminant(curve: AlgebraicCurve):
    """Resultant_y(F, dF/dy) as a univariate polynomial in u (ascending)."""
    ny = curve.deg_y
    f = [[Fraction(0)] for _ in range(ny + 1)]  # f[i] = coeff of y^i as u-poly
    for (i, j), c in curve.coeffs.items():
        while len(f[i]) <= j:
            f[i].append(Fraction(0))
        f[i][j] += c
    g = [_upoly_mul([Fraction(i)], f[i]) for i in range(1, ny + 1)]  # dF/dy coeffs
    n, m = ny, ny - 1
    size = n + m
    rows = []
    for shift in range(m):
        row = [[Fraction(0)] for _ in range(size)]
        for i in range(n + 1):
            row[shift + (n - i)] = f[i]
        rows.append(row)
    for shift in range(n):
        row = [[Fraction(0)] for _ in range(size)]
        for i in range(m + 1):
            row[shift + (m - i)] = g[i]
        rows.append(row)
    return _det_poly_matrix(rows)


def support_candidates(curve: AlgebraicCurve):
    """Real zeros of the u-discriminant: candidate support endpoints.

    Heuristic (no certification): branch points of y(u) on the real axis.
    """
    disc = y_discriminant(curve)
    arr = np.array([float(c) for c in disc], dtype=float)
    if not arr.any():
        return []
    arr = np.trim_zeros(arr, "b")
    roots = np.roots(arr[::-1])
    out = sorted({round(r.real, 9) for r in roots if abs(r.imag) < 1e-9})
    return out
