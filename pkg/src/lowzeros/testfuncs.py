"""Admissible test functions and their Fourier transforms.

Fourier convention: ``fourier(f, t) = integral of f(x) exp(i t x) dx``. All
families are even, so this is ``2 * integral_0^inf f(x) cos(t x) dx``.

Families
--------
``FAlpha(alpha)``
    ``(1-|x|) cos(pi x) + (alpha/pi) sin(pi |x|)`` on ``[-1, 1]``.
``Triangle()``
    ``1 - |x|`` on ``[-1, 1]``.
``GAlpha(alpha)``
    ``pi^2 / (2 (alpha+2)) * (FAlpha * Triangle)``, supported on ``[-2, 2]``.
``Kernel()``
    ``FAlpha(1)``.
``LTheta(theta)``
    Interpolates between ``Triangle`` (theta=0) and ``Kernel`` (theta=pi).
``JBeta(beta)``
    Normalized transform of the Beurling-Selberg minorant of ``[-beta, beta]``,
    supported on ``[-2 pi, 2 pi]``.
``GBetaMinorant(beta)``
    Minus the Beurling-Selberg minorant of ``[-beta, beta]`` for integer beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import special

from ._quad import adaptive_gl, gauss_legendre, quad_pieces
from .errors import DomainError

PI = math.pi
_TAYLOR_RADIUS = 1e-4


class Family(str, Enum):
    FALPHA = "falpha"
    TRIANGLE = "triangle"
    GALPHA = "galpha"
    KERNEL = "kernel"
    LTHETA = "ltheta"
    JBETA = "jbeta"
    GBETA = "gbeta"


_PARAMETRIZED = {Family.FALPHA, Family.GALPHA, Family.LTHETA, Family.JBETA, Family.GBETA}


@dataclass(frozen=True)
class TestFunction:
    """A test-function family together with its parameter.

    Use the constructors :func:`FAlpha`, :func:`Triangle`, ... rather than
    instantiating directly. Instances are immutable and hashable.
    """

    __test__ = False  # keep pytest from collecting this class

    family: Family
    param: float | None = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam in _PARAMETRIZED:
            if self.param is None:
                raise DomainError(f"{fam.value} requires a parameter")
            p = float(self.param)
            if not math.isfinite(p):
                raise DomainError(f"{fam.value} parameter must be finite, got {p}")
            object.__setattr__(self, "param", p)
            _check_param(fam, p)
        else:
            object.__setattr__(self, "param", None)

    @property
    def support_halfwidth(self) -> float:
        return _SUPPORT[self.family]

    @property
    def compact(self) -> bool:
        return math.isfinite(self.support_halfwidth)

    def __call__(self, x):
        return evaluate(self, x)

    def fourier(self, t):
        return fourier(self, t)

    def label(self) -> str:
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param:g})"


_SUPPORT = {
    Family.FALPHA: 1.0,
    Family.TRIANGLE: 1.0,
    Family.KERNEL: 1.0,
    Family.LTHETA: 1.0,
    Family.GALPHA: 2.0,
    Family.JBETA: 2.0 * PI,
    Family.GBETA: math.inf,
}


def _check_param(fam: Family, p: float) -> None:
    if fam is Family.FALPHA and p < 1.0:
        raise DomainError(f"FAlpha requires alpha >= 1, got {p}")
    if fam is Family.GALPHA and p <= 1.0:
        raise DomainError(f"GAlpha requires alpha > 1, got {p}")
    if fam is Family.LTHETA and not 0.0 <= p <= PI:
        raise DomainError(f"LTheta requires theta in [0, pi], got {p}")
    if fam is Family.JBETA and p <= 0.5:
        raise DomainError(f"JBeta requires beta > 1/2, got {p}")
    if fam is Family.GBETA and (p < 1 or p != int(p)):
        raise DomainError(f"GBetaMinorant requires a positive integer beta, got {p}")


def FAlpha(alpha: float) -> TestFunction:
    return TestFunction(Family.FALPHA, alpha)


def Triangle() -> TestFunction:
    return TestFunction(Family.TRIANGLE)


def GAlpha(alpha: float) -> TestFunction:
    return TestFunction(Family.GALPHA, alpha)


def Kernel() -> TestFunction:
    return TestFunction(Family.KERNEL)


def LTheta(theta: float) -> TestFunction:
    return TestFunction(Family.LTHETA, theta)


def JBeta(beta: float) -> TestFunction:
    return TestFunction(Family.JBETA, beta)


def GBetaMinorant(beta: int) -> TestFunction:
    return TestFunction(Family.GBETA, beta)


def make(family: str, param: float | None = None) -> TestFunction:
    """Build a test function from a family name such as ``"falpha"``."""
    try:
        fam = Family(family.lower())
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise DomainError(f"unknown family {family!r}; expected one of {names}") from None
    return TestFunction(fam, param)


def _wrap(x, out):
    if np.ndim(x) == 0:
        return float(out)
    return out


# ---------------------------------------------------------------------------
# stable building blocks


def _half_sinc(v):
    """sin(v/2)/v, with a 4-term Taylor series near the removable point v=0."""
    v = np.asarray(v, dtype=float)
    small = np.abs(v) < _TAYLOR_RADIUS
    safe = np.where(small, 1.0, v)
    v2 = v * v
    series = 0.5 - v2 / 48.0 + v2 * v2 / 3840.0 - v2 * v2 * v2 / 645120.0
    return np.where(small, series, np.sin(0.5 * safe) / safe)


def _cos_ratio(t):
    """cos(t/2)/(pi^2 - t^2), rewritten so t = +-pi is not a 0/0."""
    a = np.abs(np.asarray(t, dtype=float))
    # cos(t/2) = -sin((|t|-pi)/2) and pi^2 - t^2 = -(|t|-pi)(|t|+pi)
    return _half_sinc(a - PI) / (a + PI)


def _falpha_x(x, alpha):
    a = np.abs(np.asarray(x, dtype=float))
    inside = a <= 1.0
    val = (1.0 - a) * np.cos(PI * a) + (alpha / PI) * np.sin(PI * a)
    return np.where(inside, val, 0.0)


def _triangle_x(x):
    a = np.abs(np.asarray(x, dtype=float))
    return np.where(a < 1.0, 1.0 - a, 0.0)


def _ltheta_norm(theta):
    return 0.5 * (np.sinc(theta / PI) + 1.0)


def _ltheta_x(x, theta):
    a = np.abs(np.asarray(x, dtype=float))
    u = np.clip(1.0 - a, 0.0, None)
    # sin(theta u)/(2 theta) = (u/2) sinc(theta u / pi), finite at theta = 0
    num = 0.5 * u * np.sinc(theta * u / PI) + 0.5 * u * np.cos(theta * a)
    return np.where(a <= 1.0, num / _ltheta_norm(theta), 0.0)


def _galpha_x(x, alpha, nodes=24):
    """Convolution quadrature, exact to rounding on each analytic piece."""
    a = np.abs(np.asarray(x, dtype=float).ravel())
    e0 = np.minimum(a - 1.0, 1.0)
    e1 = np.clip(0.0, e0, 1.0)
    e2 = np.clip(a, e1, 1.0)
    e3 = np.ones_like(a)
    z, w = gauss_legendre(nodes)
    total = np.zeros_like(a)
    for lo, hi in ((e0, e1), (e1, e2), (e2, e3)):
        half = 0.5 * (hi - lo)
        y = (0.5 * (hi + lo))[:, None] + half[:, None] * z[None, :]
        vals = _falpha_x(y, alpha) * _triangle_x(a[:, None] - y)
        total += half * (vals @ w)
    return PI**2 / (2.0 * (alpha + 2.0)) * total


def _bs_odd_scalar(z: float) -> float:
    """Odd part of Beurling's function: (sin(pi z)/pi)^2 (2/z + sum 1/(z-n)^2 - sum 1/(z+n)^2)."""
    if z < 0:
        return -_bs_odd_scalar(-z)
    s2 = (math.sin(PI * z) / PI) ** 2
    n = int(math.floor(z + 0.5))
    if n == 0:
        return s2 * (special.polygamma(1, 1.0 - z) - special.polygamma(1, 1.0 + z)) \
            + 2.0 * z * float(np.sinc(z)) ** 2
    u = z - n
    # split the pole 1/(z-n)^2 out of trigamma(1-z) via the recurrence
    k = np.arange(0, n - 1)
    reg = float(np.sum(1.0 / (1.0 - z + k) ** 2)) + special.polygamma(1, 1.0 + n - z)
    return float(np.sinc(u)) ** 2 + s2 * (reg - special.polygamma(1, 1.0 + z) + 2.0 / z)


def beurling(z, sign: int = -1):
    """Beurling's majorant (sign=+1) or minorant (sign=-1) of sgn(x)."""
    zz = np.asarray(z, dtype=float)
    odd = np.vectorize(_bs_odd_scalar, otypes=[float])(zz)
    out = odd + sign * np.sinc(zz) ** 2
    return _wrap(z, out)


def bs_minorant_interval(t, beta: float):
    """Beurling-Selberg minorant of the indicator of [-beta, beta]."""
    tt = np.asarray(t, dtype=float)
    out = 0.5 * (beurling(tt + beta, -1) + beurling(beta - tt, -1))
    return _wrap(t, out)


def bs_minorant_transform(xi, beta: float):
    """Fourier transform of the minorant, in the frequency variable xi = t/(2 pi).

    Supported on |xi| < 1; equals 2 beta - 1 at xi = 0.
    """
    a = np.abs(np.asarray(xi, dtype=float))
    inside = a < 1.0
    a = np.where(inside, a, 0.0)
    w = 1.0 - a
    s = np.sin(2 * PI * beta * a)
    c = np.cos(2 * PI * beta * a)
    # (1-a) sin(2 pi beta a) cot(pi a), written stably near both a=0 and a=1
    near0 = 2.0 * beta * w * np.cos(PI * a) * np.sinc(2 * beta * a) / np.sinc(a)
    with np.errstate(divide="ignore", invalid="ignore"):
        near1 = np.cos(PI * a) * s / (PI * np.sinc(w))
    first = np.where(a < 0.5, near0, near1)
    out = first - w * c + s / PI
    return _wrap(xi, np.where(inside, out, 0.0))


def _gbeta_x(x, beta):
    x = np.asarray(x, dtype=float)
    b = float(beta)
    out = (x - b) * np.sinc(x - b) ** 2 - (x + b) * np.sinc(x + b) ** 2
    shifts = np.arange(1, int(2 * b)) - b
    if shifts.size:
        out = out - np.sum(np.sinc(x[..., None] + shifts) ** 2, axis=-1)
    return out


# ---------------------------------------------------------------------------
# public evaluators


def evaluate(f: TestFunction, x):
    """Value of the test function at ``x`` (scalar or array)."""
    fam, p = f.family, f.param
    if fam is Family.FALPHA:
        out = _falpha_x(x, p)
    elif fam is Family.KERNEL:
        out = _falpha_x(x, 1.0)
    elif fam is Family.TRIANGLE:
        out = _triangle_x(x)
    elif fam is Family.LTHETA:
        out = _ltheta_x(x, p)
    elif fam is Family.GALPHA:
        out = _galpha_x(x, p).reshape(np.shape(x))
    elif fam is Family.JBETA:
        a = np.abs(np.asarray(x, dtype=float))
        out = np.where(a < 2 * PI, bs_minorant_transform(a / (2 * PI), p), 0.0) / (2 * p - 1)
    else:
        out = _gbeta_x(x, p)
    return _wrap(x, out)


def fourier(f: TestFunction, t):
    """Closed-form Fourier transform at frequency ``t`` (scalar or array)."""
    fam, p = f.family, f.param
    tt = np.asarray(t, dtype=float)
    if fam in (Family.FALPHA, Family.KERNEL, Family.GALPHA):
        alpha = 1.0 if fam is Family.KERNEL else p
        pref = (alpha + 1.0) - (alpha - 1.0) * tt * tt / PI**2
        out = pref * (2.0 * PI * _cos_ratio(tt)) ** 2
        if fam is Family.GALPHA:
            out = PI**2 / (2.0 * (alpha + 2.0)) * out * (2.0 * _half_sinc(tt)) ** 2
    elif fam is Family.TRIANGLE:
        out = (2.0 * _half_sinc(tt)) ** 2
    elif fam is Family.LTHETA:
        out = (_half_sinc(p - tt) + _half_sinc(p + tt)) ** 2 / _ltheta_norm(p)
    elif fam is Family.JBETA:
        out = 2.0 * PI * bs_minorant_interval(tt, p) / (2.0 * p - 1.0)
    else:
        out = -bs_minorant_transform(tt / (2 * PI), p)
    return _wrap(t, out)


def _breakpoints(f: TestFunction) -> list[float]:
    c = f.support_halfwidth
    if f.family is Family.GALPHA:
        return [0.0, 1.0, 2.0]
    return [0.0, c]


def fourier_numeric(f: TestFunction, t: float, tol: float = 1e-10) -> float:
    """Fourier transform by adaptive quadrature of the defining integral.

    Independent of :func:`fourier`; used as its oracle. Raises
    :class:`~lowzeros.errors.QuadratureError` if ``tol`` is not reached.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    t = abs(float(t))
    if f.family is Family.GBETA:
        return _gbeta_fourier_numeric(f.param, t, tol)
    # each piece between breakpoints is analytic, so panel doubling converges geometrically
    bps = _breakpoints(f)
    total = 0.0
    for lo, hi in zip(bps[:-1], bps[1:]):
        panels = max(4, int(math.ceil(t * (hi - lo) / PI)))
        total += adaptive_gl(lambda x: evaluate(f, x) * np.cos(t * x), lo, hi,
                             tol=tol / (4 * len(bps)), panels=panels)
    return 2.0 * total


def _gbeta_fourier_numeric(beta: float, t: float, tol: float) -> float:
    # finite part by quadrature, tail from the partial-fraction form of g_beta
    X = beta + 20.0
    # g_beta is entire, so plain composite Gauss-Legendre converges geometrically
    panels = int(X * (1.0 + t / PI)) + 4
    head = adaptive_gl(lambda x: _gbeta_x(x, beta) * np.cos(t * x), 0.0, X,
                       tol=tol / 4, panels=panels)
    tail = 0.0
    for omega, wgt in ((t, 1.0), (t + 2 * PI, -0.5), (abs(t - 2 * PI), -0.5)):
        tail += wgt * _rational_cos_tail(beta, omega, X)
    return 2.0 * (head + tail / (2 * PI**2))


def _rational_cos_tail(beta: float, omega: float, X: float) -> float:
    """Integral over [X, inf) of R(x) cos(omega x) with
    R(x) = 1/(x-beta) - 1/(x+beta) - sum_n 1/(x-beta+n)^2."""
    poles2 = [beta - n for n in range(1, int(2 * beta))]
    if omega < 1e-12:
        val = -math.log((X - beta) / (X + beta))
        return val - sum(1.0 / (X - c) for c in poles2)

    def inv1(c):
        # integral_X^inf cos(omega x)/(x - c) dx
        si, ci = special.sici(omega * (X - c))
        return -math.cos(omega * c) * ci - math.sin(omega * c) * (PI / 2 - si)

    def inv2(c):
        # integral_X^inf cos(omega x)/(x - c)^2 dx, by parts
        a = X - c
        si, ci = special.sici(omega * a)
        sin_int = math.cos(omega * c) * (PI / 2 - si) - math.sin(omega * c) * ci
        return math.cos(omega * X) / a - omega * sin_int

    return inv1(beta) - inv1(-beta) - sum(inv2(c) for c in poles2)


def sign_threshold(f: TestFunction) -> float:
    """Smallest t0 with fourier(f, t) <= 0 for every |t| >= t0 (inf if never)."""
    fam, p = f.family, f.param
    if fam in (Family.FALPHA, Family.GALPHA):
        if p == 1.0:
            return math.inf
        return math.sqrt((p + 1.0) / (p - 1.0)) * PI
    if fam is Family.JBETA:
        return p
    if fam is Family.GBETA:
        # the transform vanishes identically for |t| >= 2 pi
        return 2.0 * PI
    return math.inf


def sigma_weight(f: TestFunction) -> float:
    """integral of |u| f(u)^2 du over the support."""
    if not f.compact:
        raise DomainError("sigma_weight needs a compactly supported family")
    if f.family is Family.FALPHA:
        a = f.param
        return (6 * a * a + PI**2 - 3) / (12 * PI**2)
    return sigma_weight_numeric(f)


def sigma_weight_numeric(f: TestFunction, tol: float = 1e-12) -> float:
    if not f.compact:
        raise DomainError("sigma_weight needs a compactly supported family")
    g = lambda u: u * evaluate(f, u) ** 2  # noqa: E731
    return 2.0 * quad_pieces(g, _breakpoints(f), tol=tol)


def phi_transform(f: TestFunction, T: float, s: complex, tol: float = 1e-11) -> complex:
    """Phi(F_T)(s) = integral F(x/T) exp((s - 1/2) x) dx by quadrature."""
    if not f.compact:
        raise DomainError("phi_transform needs a compactly supported family")
    c = f.support_halfwidth
    z = complex(s) - 0.5
    bps = [T * b for b in sorted({-c, *[-v for v in _breakpoints(f)], *_breakpoints(f)})]
    re = quad_pieces(lambda x: evaluate(f, x / T) * math.exp(z.real * x) * math.cos(z.imag * x),
                     bps, tol=tol)
    im = quad_pieces(lambda x: evaluate(f, x / T) * math.exp(z.real * x) * math.sin(z.imag * x),
                     bps, tol=tol)
    return complex(re, im)
