"""Thin wrappers around :func:`scipy.integrate.quad` with explicit failure."""

from __future__ import annotations

import warnings
from functools import lru_cache

import numpy as np
from scipy import integrate

from .errors import QuadratureError


def quad(func, a, b, *, tol=1e-12, rtol=0.0, points=None, weight=None, wvar=None, limit=400):
    """Integrate ``func`` over ``[a, b]`` and raise if the estimate misses the target.

    The target is ``max(tol, rtol * |value|)``. ``weight``/``wvar`` are
    forwarded to QUADPACK's oscillatory rules (``'cos'``/``'sin'``).
    """
    kwargs = dict(epsabs=tol, epsrel=rtol, limit=limit)
    if points is not None and weight is None and np.isfinite(a) and np.isfinite(b):
        pts = sorted({float(p) for p in points if a < p < b})
        if pts:
            kwargs["points"] = pts
    if weight is not None:
        kwargs["weight"] = weight
        kwargs["wvar"] = wvar
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(func, a, b, **kwargs)
    if not np.isfinite(value) or err > max(tol, rtol * abs(value), 1e-15) * 10:
        raise QuadratureError(
            f"quadrature on [{a}, {b}] reached error estimate {err:.3g} > {tol:.3g}",
            achieved=err,
        )
    return value


def quad_pieces(func, breakpoints, *, tol=1e-12, rtol=0.0, weight=None, wvar=None, limit=400):
    """Sum of :func:`quad` over consecutive intervals of ``breakpoints``."""
    total = 0.0
    bps = list(breakpoints)
    for lo, hi in zip(bps[:-1], bps[1:]):
        if hi > lo:
            total += quad(func, lo, hi, tol=tol / max(len(bps) - 1, 1), rtol=rtol,
                          weight=weight, wvar=wvar, limit=limit)
    return total


@lru_cache(maxsize=16)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    return np.polynomial.legendre.leggauss(n)


def composite_gl(func, a: float, b: float, panels: int, nodes: int = 20) -> float:
    """Composite Gauss-Legendre rule for a vectorized ``func``."""
    z, w = gauss_legendre(nodes)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = mid[:, None] + half[:, None] * z[None, :]
    vals = np.asarray(func(x), dtype=float)
    return float(np.sum(half * (vals @ w)))


def adaptive_gl(func, a: float, b: float, *, tol: float = 1e-12, panels: int = 8,
                nodes: int = 20, max_doublings: int = 12) -> float:
    """Composite Gauss-Legendre with panel doubling until two passes agree to ``tol``."""
    prev = composite_gl(func, a, b, panels, nodes)
    for _ in range(max_doublings):
        panels *= 2
        cur = composite_gl(func, a, b, panels, nodes)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise QuadratureError(
        f"panel refinement on [{a}, {b}] stalled at difference {abs(cur - prev):.3g}",
        achieved=abs(cur - prev),
    )
