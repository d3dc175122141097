"""One-dimensional golden-section search with a post-hoc unimodality check."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of :func:`minimize_1d` or :func:`maximize_1d`.

    ``x`` is the argmin (or argmax when ``kind == "max"``) and ``optimum`` is
    the objective evaluated exactly at ``x``. ``unimodal`` is False when the
    neighbour scan found a clearly better point away from ``x``.
    """

    x: float
    optimum: float
    iterations: int
    bracket: tuple[float, float]
    unimodal: bool = True
    kind: str = "min"

    @property
    def argmin(self) -> float:
        return self.x

    @property
    def argmax(self) -> float:
        return self.x


def _golden(obj, lo, hi, tol, max_iter):
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = obj(c), obj(d)
    it = 0
    while b - a > tol and it < max_iter:
        it += 1
        if fc <= fd:  # ties move toward smaller x
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = obj(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = obj(d)
    return a, b, it


def minimize_1d(objective, lo: float, hi: float, tol: float = 1e-8, *,
                max_iter: int = 500, scan_points: int = 64) -> OptimizationResult:
    """Golden-section minimization of ``objective`` on ``[lo, hi]``.

    The objective is assumed unimodal; after convergence ``scan_points``
    equally spaced samples are compared against the optimum and the result
    is flagged when one of them is better by more than rounding.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        raise DomainError(f"invalid bracket [{lo}, {hi}]")
    if not tol > 0:
        raise DomainError("tol must be positive")
    a, b, it = _golden(objective, lo, hi, tol, max_iter)
    candidates = [0.5 * (a + b)]
    if a == lo:
        candidates.append(lo)
    if b == hi:
        candidates.append(hi)
    vals = [objective(x) for x in candidates]
    k = int(np.argmin(vals))
    x, fx = candidates[k], vals[k]
    unimodal = True
    if scan_points:
        grid = np.linspace(lo, hi, scan_points)
        gvals = np.array([objective(g) for g in grid])
        j = int(np.argmin(gvals))
        slack = 1e-12 * (1.0 + abs(fx))
        step = (hi - lo) / (scan_points - 1)
        if gvals[j] < fx - slack and abs(grid[j] - x) > step:
            unimodal = False
    return OptimizationResult(x=x, optimum=fx, iterations=it, bracket=(a, b),
                              unimodal=unimodal, kind="min")


def maximize_1d(objective, lo: float, hi: float, tol: float = 1e-8, **kw) -> OptimizationResult:
    """Golden-section maximization; see :func:`minimize_1d`."""
    res = minimize_1d(lambda x: -objective(x), lo, hi, tol, **kw)
    return OptimizationResult(x=res.x, optimum=-res.optimum, iterations=res.iterations,
                              bracket=res.bracket, unimodal=res.unimodal, kind="max")
