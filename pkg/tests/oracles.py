"""Independent oracles for the test suite.

Everything here reimplements the formulas from scratch, on top of mpmath
extended-precision arithmetic (50 digits unless stated), so the library is
checked against a computation that shares none of its code paths:

* ``w_mp``/``f2_mp`` evaluate the literal exp(x^2)*erfc(x) product, which
  mpmath can afford at any x; the library must agree with its overflow-safe
  form to 1e-14 absolute.
* minima/maxima use dense scans plus ternary refinement in mpmath.
* support endpoints are bracketed by a dense float64 sign scan of the
  independently coded window functions and refined by mpmath bisection.
* the rate integral is evaluated with mpmath's tanh-sinh (double
  exponential) quadrature, which absorbs the inverse-square-root endpoint
  singularities natively, with no arcsine substitution involved; and,
  as a second, cruder route, by a stratified midpoint rule in float64.

Run this module directly to regenerate every frozen anchor used in the
tests: ``python tests/oracles.py``.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np
from scipy.special import erfcx as _np_erfcx

mp.mp.dps = 50

R_DDI_MP = mp.sqrt(mp.pi / 2)
G_MAX = 10.0


def w_mp(x):
    x = mp.mpf(x)
    return mp.exp(x * x) * mp.erfc(x)


def f2_mp(g, A, R):
    g, A, R = mp.mpf(g), mp.mpf(A), mp.mpf(R)
    return 1 - (3 * R / 2) * mp.sqrt(A) * g * w_mp(mp.sqrt(A / 2) * g) + g * g / 4


def f_mp(g, A, R):
    return mp.sqrt(f2_mp(g, A, R))


def min_f2_mp(A, R, lo=0.0, hi=3.0, n=2000, refine=300):
    """(argmin, min) of f^2 by dense scan + ternary refinement."""
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    best_g, best_v = lo, f2_mp(lo, A, R)
    for i in range(n + 1):
        g = lo + (hi - lo) * i / n
        v = f2_mp(g, A, R)
        if v < best_v:
            best_v, best_g = v, g
    a = max(lo, best_g - (hi - lo) / n)
    b = min(hi, best_g + (hi - lo) / n)
    for _ in range(refine):
        m1 = a + (b - a) / 3
        m2 = b - (b - a) / 3
        if f2_mp(m1, A, R) < f2_mp(m2, A, R):
            b = m2
        else:
            a = m1
    g = (a + b) / 2
    return g, f2_mp(g, A, R)


def critical_A_mp(R, lo=3.0, hi=4.0, iters=150):
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    assert min_f2_mp(lo, R)[1] > 0 and min_f2_mp(hi, R)[1] < 0
    for _ in range(iters):
        mid = (lo + hi) / 2
        if min_f2_mp(mid, R)[1] > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def excitation_window_mp(beta, A, R, lo=0.0, hi=3.0, n=2000, refine=300):
    """sup of g*(tanh(beta) - f(g)) by dense scan + ternary refinement."""
    t = mp.tanh(mp.mpf(beta))

    def neg(g):
        return g * (f_mp(g, A, R) - t)

    lo, hi = mp.mpf(lo), mp.mpf(hi)
    best_g, best_v = lo, neg(lo)
    for i in range(n + 1):
        g = lo + (hi - lo) * i / n
        v = neg(g)
        if v < best_v:
            best_v, best_g = v, g
    a = max(lo, best_g - (hi - lo) / n)
    b = min(hi, best_g + (hi - lo) / n)
    for _ in range(refine):
        m1 = a + (b - a) / 3
        m2 = b - (b - a) / 3
        if neg(m1) < neg(m2):
            b = m2
        else:
            a = m1
    v = neg((a + b) / 2)
    return max(mp.mpf(0), -v)


# ---------------------------------------------------------------------------
# support intervals

def _f2_np(g, A, R):
    return 1.0 - 1.5 * R * math.sqrt(A) * g * _np_erfcx(math.sqrt(A / 2.0) * g) \
        + 0.25 * g * g


def support_intervals_mp(omega_tilde, speed, A, R, n_lin=400001, n_log=40001):
    """Maximal {g: g*speed > |omega_tilde + g*f(g)|} intervals in (0, G_MAX].

    Brackets come from a dense float64 scan of N = Om + g*(f - t) and
    P = Om + g*(f + t); each sign change is then bisected in mpmath to
    ~1e-30.  Intended for windows wider than ~2.5e-5 (regression points are
    chosen accordingly).
    """
    t_f = float(speed)
    grid = np.unique(np.concatenate([
        np.linspace(0.0, G_MAX, n_lin),
        np.geomspace(1e-8, G_MAX, n_log),
    ]))
    f_vals = np.sqrt(np.maximum(_f2_np(grid, A, R), 0.0))
    gf = grid * f_vals
    roots = []
    t_mp = mp.mpf(repr(speed))
    om_mp = mp.mpf(repr(omega_tilde))
    A_mp, R_mp = mp.mpf(repr(A)), mp.mpf(repr(R))

    def n_fn(g):
        return om_mp + g * (f_mp(g, A_mp, R_mp) - t_mp)

    def p_fn(g):
        return om_mp + g * (f_mp(g, A_mp, R_mp) + t_mp)

    for vals, fn in ((omega_tilde + gf - t_f * grid, n_fn),
                     (omega_tilde + gf + t_f * grid, p_fn)):
        s = np.sign(vals)
        s[s == 0] = 1.0
        for i in np.flatnonzero(s[:-1] != s[1:]):
            a, b = mp.mpf(repr(float(grid[i]))), mp.mpf(repr(float(grid[i + 1])))
            fa = fn(a)
            for _ in range(130):
                m = (a + b) / 2
                fm = fn(m)
                if (fm < 0) == (fa < 0):
                    a, fa = m, fm
                else:
                    b = m
            roots.append((a + b) / 2)

    def phi(g):
        m = om_mp + g * f_mp(g, A_mp, R_mp)
        return (t_mp * g - m) * (t_mp * g + m)

    edges = [mp.mpf(0)] + sorted(roots) + [mp.mpf(G_MAX)]
    out = []
    for a, b in zip(edges[:-1], edges[1:]):
        if b - a > mp.mpf("1e-20") and phi((a + b) / 2) > 0:
            out.append((a, b))
    return out


def rate_tanhsinh_mp(omega_tilde, speed, A, R, dps=30, intervals=None):
    """Rate integral by tanh-sinh quadrature on each support interval."""
    with mp.workdps(dps):
        if intervals is None:
            intervals = support_intervals_mp(omega_tilde, speed, A, R)
        t = mp.mpf(repr(speed))
        om = mp.mpf(repr(omega_tilde))
        A_mp, R_mp = mp.mpf(repr(A)), mp.mpf(repr(R))

        def integrand(g):
            fg = f_mp(g, A_mp, R_mp)
            m = om + g * fg
            phi = (t * g - m) * (t * g + m)
            if phi <= 0:
                return mp.mpf(0)
            return g * g / (fg * mp.sqrt(phi))

        total = mp.mpf(0)
        for a, b in intervals:
            total += mp.quad(integrand, [a, b], method="tanh-sinh")
        return total


def rate_stratified(omega_tilde, speed, A, R, n_per_interval=4_000_000,
                    intervals=None, chunk=500_000):
    """Rate integral by a composite (stratified) midpoint rule in float64.

    The midpoint rule never evaluates at the singular endpoints; its error
    is dominated by the first/last strata and scales like sqrt(width/n),
    giving ~1e-4 relative at the default sample count.
    """
    if intervals is None:
        intervals = support_intervals_mp(omega_tilde, speed, A, R)
    t = float(speed)
    om = float(omega_tilde)
    total = 0.0
    for a_mp, b_mp in intervals:
        a, b = float(a_mp), float(b_mp)
        h = (b - a) / n_per_interval
        acc = 0.0
        done = 0
        while done < n_per_interval:
            m = min(chunk, n_per_interval - done)
            g = a + (done + np.arange(m) + 0.5) * h
            f2 = _f2_np(g, A, R)
            f = np.sqrt(f2)
            mm = om + g * f
            phi = (t * g - mm) * (t * g + mm)
            good = phi > 0.0
            acc += float(np.sum(g[good] ** 2 / (f[good] * np.sqrt(phi[good]))))
            done += m
        total += acc * h
    return total


# ---------------------------------------------------------------------------
# frozen-anchor regeneration

def _print_anchors():
    mp.mp.dps = 50
    print("w(1)   =", mp.nstr(w_mp(1), 25))
    print("w(50)  =", mp.nstr(w_mp(50), 25))
    print("w(0.5) =", mp.nstr(w_mp(0.5), 25))
    print("f2(0.9, 3.0, ddi) =", mp.nstr(f2_mp("0.9", 3, R_DDI_MP), 25))
    print("f(0.9, 3.0, ddi)  =", mp.nstr(f_mp("0.9", 3, R_DDI_MP), 25))
    print("f2(0.9, 3.4454, ddi) =", mp.nstr(f2_mp("0.9", "3.4454", R_DDI_MP), 25))
    for a in ("2.0", "2.5", "3.0", "3.4", "3.4454"):
        g, v = min_f2_mp(a, R_DDI_MP)
        fc = mp.sqrt(v)
        print(f"A={a}: g_min={mp.nstr(g, 20)} f_c={mp.nstr(fc, 20)} "
              f"beta_c={mp.nstr(mp.atanh(fc), 20)}")
    print("A_c(ddi) =", mp.nstr(critical_A_mp(R_DDI_MP), 22))
    print("A_c(R=1) =", mp.nstr(critical_A_mp(mp.mpf(1), lo=4.0, hi=40.0), 22))
    print("window(beta=0.5, A=3.4, ddi) =",
          mp.nstr(excitation_window_mp("0.5", "3.4", R_DDI_MP), 22))
    for om, beta, a in ((0.1, 0.6, 3.4), (-0.1, 0.05, 3.4), (0.01, 0.3, 2.5)):
        t = mp.tanh(mp.mpf(repr(beta)))
        iv = support_intervals_mp(om, float(t), a, float(R_DDI_MP))
        val = rate_tanhsinh_mp(om, float(t), a, float(R_DDI_MP), intervals=iv)
        print(f"rate(om={om}, beta={beta}, A={a}): n_iv={len(iv)} "
              f"value={mp.nstr(val, 18)}")


if __name__ == "__main__":
    _print_anchors()
