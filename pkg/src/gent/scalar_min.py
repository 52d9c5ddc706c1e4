"""Bracketed scalar minimization: golden-section search and grid refinement."""

from __future__ import annotations

import math

import numpy as np

from .errors import BracketFailure

INV_PHI = (math.sqrt(5) - 1) / 2  # 1/phi


def golden_section(f, a: float, b: float, tol: float = 1e-10) -> tuple[float, float]:
    """Minimize f on [a, b]; returns (x_min, f(x_min)) with |interval| <= tol."""
    a, b = min(a, b), max(a, b)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    x = c if fc < fd else d
    return x, min(fc, fd)


def bracket_doubling(f, x0: float, step: float, xmax: float = 1e6):
    """Walk right from x0 with doubling steps until f increases.

    Returns (a, b) bracketing the minimum of a function that decreases
    at x0.  Raises BracketFailure if no increase is seen before xmax.
    """
    xa, fa = x0, f(x0)
    xb = x0 + step
    fb = f(xb)
    while fb <= fa:
        xa, fa = xb, fb
        step *= 2.0
        xb = xb + step
        if xb > xmax:
            raise BracketFailure(f"no increase of objective found before x = {xmax:g}")
        fb = f(xb)
    return max(x0, xa - step), xb


def grid_minimize(f, lo: float, hi: float, points: int = 2000, refinements: int = 8):
    """Grid-scan minimizer: coarse scan then repeated local re-gridding.

    ``f`` must accept a numpy array.  Independent of golden_section; used as
    the brute-force oracle for the 1-D transcendental minimizations.
    """
    a, b = lo, hi
    xbest, fbest = None, np.inf
    for _ in range(refinements):
        xs = np.linspace(a, b, points)
        ys = f(xs)
        i = int(np.argmin(ys))
        if ys[i] < fbest:
            xbest, fbest = float(xs[i]), float(ys[i])
        # re-grid around the current minimum, never leaving [lo, hi]
        h = (b - a) / (points - 1)
        a = max(lo, xs[i] - 2 * h)
        b = min(hi, xs[i] + 2 * h)
    return xbest, fbest
