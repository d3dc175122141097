"""Critical-line zeros of Dirichlet L-functions of small conductor.

``L(s, chi) = sum_{n <= Nq} chi(n) n^{-s} + q^{-s} sum_a chi(a) zeta_N(s, a/q)``
where the Hurwitz tail ``zeta_N(s, x) = sum_{m >= 0} (x + N + m)^{-s}`` is
evaluated by Euler-Maclaurin. The Hardy-type function

    Z(t) = e^{i theta(t)} L(1/2 + it, chi) / sqrt(eps(chi)),
    theta(t) = (t/2) log(q/pi) + Im log Gamma((1/2 + delta + it)/2),

is real on the critical line, so zeros are located by sign changes.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np
from scipy import special

from .characters import Character
from .errors import DomainError, PrecisionError

ACCURACY = 1e-8
_EM_TERMS = 12
# B_{2j} / (2j)! for j = 1..12
_EM_COEFFS = np.array([special.bernoulli(2 * j)[-1] / math.factorial(2 * j)
                       for j in range(1, _EM_TERMS + 1)])
_BLOCK = 2_000_000
_RESTART = 32


def root_number(chi: Character) -> complex:
    """eps(chi) = tau(chi) / (i^delta sqrt(q)) from the Gauss sum."""
    q = chi.q
    a = np.arange(q)
    tau = np.sum(chi.values * np.exp(2j * np.pi * a / q))
    return complex(tau / ((1j) ** chi.parity * math.sqrt(q)))


def theta(t, q: int, parity: int) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return 0.5 * t * math.log(q / math.pi) + np.imag(special.loggamma((0.5 + parity + 1j * t) / 2))


def _direct_sum(t: np.ndarray, ln: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Sum of c_n n^(-1/2 - it) over the given log n, for each t.

    On a uniform grid the phases advance by a fixed factor per step, so rows are
    produced by multiplication with an exact restart every ``_RESTART`` rows.
    """
    w = c * np.exp(-0.5 * ln)
    if t.size < 2 * _RESTART:
        return np.exp(-1j * np.outer(t, ln)) @ w
    h = (t[-1] - t[0]) / (t.size - 1)
    if np.max(np.abs(np.diff(t) - h)) > 1e-12 * max(1.0, abs(h)):
        return np.exp(-1j * np.outer(t, ln)) @ w
    ratio = np.exp(-1j * h * ln)
    out = np.empty(t.size, dtype=complex)
    for k in range(t.size):
        if k % _RESTART == 0:
            e = np.exp(-1j * t[k] * ln) * w
        else:
            e = e * ratio
        out[k] = e.sum()
    return out


class HardyEvaluator:
    """Evaluator of L(1/2 + it, chi) and Z(t) for a primitive character."""

    def __init__(self, chi: Character, em_terms: int = _EM_TERMS):
        if not chi.primitive or chi.principal:
            raise DomainError(f"{chi!r} is not a primitive nonprincipal character")
        self.chi = chi
        self.q = chi.q
        self.parity = chi.parity
        self.em_terms = int(em_terms)
        self.eps = root_number(chi)
        if abs(abs(self.eps) - 1.0) > 1e-10:
            raise PrecisionError(f"root number has modulus {abs(self.eps)}", abs(abs(self.eps) - 1))
        self._sqrt_eps = cmath.sqrt(self.eps)

    @cached_property
    def _values(self) -> np.ndarray:
        return self.chi.values

    def depth(self, tmax: float) -> int:
        return int(max(tmax, 10.0) / math.pi) + 12

    @lru_cache(maxsize=8)
    def _terms(self, N: int):
        q = self.q
        chi = self._values
        n = np.arange(1, N * q + 1)
        c = chi[n % q]
        keep = c != 0
        n, c = n[keep], c[keep]
        a = np.flatnonzero(chi)
        x = a / q + N
        return np.log(n), c, x, np.log(x), chi[a]

    def l_values(self, t, *, with_error: bool = False, tmax: float | None = None):
        """L(1/2 + it, chi) for an array of t; optionally the Euler-Maclaurin error estimate.

        ``tmax`` fixes the truncation depth (it must bound ``|t|``) so that
        repeated calls share precomputed terms.
        """
        t = np.atleast_1d(np.asarray(t, dtype=float))
        q = self.q
        top = float(np.max(np.abs(t))) if t.size else 0.0
        N = self.depth(max(top, tmax or 0.0))
        ln, c, x, lx, ca = self._terms(N)
        out = np.empty(t.size, dtype=complex)
        err = np.empty(t.size)
        rows = max(1, _BLOCK // max(ln.size, 1))
        for lo in range(0, t.size, rows):
            s = 0.5 + 1j * t[lo: lo + rows]
            direct = _direct_sum(t[lo: lo + rows], ln, c)
            S = s[:, None]
            xs = np.exp(-S * lx)
            z = x * xs / (S - 1) + 0.5 * xs
            poch = S.copy()
            xp = xs / x
            term = np.zeros_like(z)
            for j in range(1, self.em_terms + 1):
                term = _EM_COEFFS[j - 1] * poch * xp
                z = z + term
                poch = poch * (S + 2 * j - 1) * (S + 2 * j)
                xp = xp / (x * x)
            qs = np.exp(-s * math.log(q))
            out[lo: lo + rows] = direct + qs * (z @ ca)
            err[lo: lo + rows] = np.abs(qs) * (np.abs(term) @ np.abs(ca))
        if np.any(err > ACCURACY):
            worst = float(err.max())
            raise PrecisionError(f"Euler-Maclaurin error estimate {worst:.3g} above {ACCURACY}", worst)
        return (out, err) if with_error else out

    def z_complex(self, t, tmax: float | None = None) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return (np.exp(1j * theta(t, self.q, self.parity))
                * self.l_values(t, tmax=tmax) / self._sqrt_eps)

    def z(self, t, tmax: float | None = None) -> np.ndarray:
        return np.real(self.z_complex(t, tmax))

    def __call__(self, t: float) -> float:
        return float(self.z(np.array([t]))[0])


def l_on_critical_line(chi: Character, t):
    """L(1/2 + it, chi) for a primitive character (scalar or array t)."""
    vals = HardyEvaluator(chi).l_values(t)
    return complex(vals[0]) if np.ndim(t) == 0 else vals


def hardy_z(ev: HardyEvaluator, t):
    vals = ev.z(t)
    return float(vals[0]) if np.ndim(t) == 0 else vals


def main_term(q: int, t: float, parity: int) -> float:
    """(t/pi) log(qt / 2 pi e) - chi(-1)/4."""
    chi_m1 = 1 - 2 * parity
    return t / math.pi * math.log(q * t / (2 * math.pi * math.e)) - chi_m1 / 4


def count_band(q: int, t: float) -> tuple[float, bool]:
    """Half-width 0.22737 l + 2 log(1 + l) - 0.5 and whether it applies (t >= 5/7, l > 1.567)."""
    ell = math.log(q * (t + 2) / (2 * math.pi))
    band = 0.22737 * ell + 2 * math.log1p(ell) - 0.5
    return band, (t >= 5 / 7 and ell > 1.567)


@dataclass(frozen=True)
class ZeroList:
    """Zeros 1/2 + i gamma of L(s, chi) with |gamma| <= height.

    ``ordinates`` holds the signed nonzero ordinates in increasing order;
    ``n_central`` is the detected multiplicity at gamma = 0 (0 or a flagged 2).
    """

    chi: Character
    height: float
    ordinates: np.ndarray
    residuals: np.ndarray = field(repr=False)
    n_central: int = 0
    complete: bool = True
    step: float = 0.0

    def __len__(self) -> int:
        return int(self.ordinates.size) + self.n_central

    def count(self, t: float) -> float:
        """Two-sided count of zeros with |gamma| <= t; those at |gamma| = t weigh 1/2."""
        g = np.abs(self.ordinates)
        return float(np.sum(g < t) + 0.5 * np.sum(g == t)) + self.n_central

    def positive(self) -> np.ndarray:
        return self.ordinates[self.ordinates > 0]

    def conjugate(self) -> "ZeroList":
        """Zeros of the conjugate character (ordinates negated)."""
        order = np.argsort(-self.ordinates)
        return ZeroList(self.chi.conj(), self.height, -self.ordinates[order],
                        self.residuals[order], self.n_central, self.complete, self.step)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["q", "char_index", "gamma", "refined_residual"])
            for g, r in zip(self.ordinates, self.residuals):
                w.writerow([self.chi.q, self.chi.label, f"{g:.12g}", f"{r:.3g}"])


def _refine(func, a: np.ndarray, b: np.ndarray, fa: np.ndarray, fb: np.ndarray,
            xtol: float, max_iter: int = 200) -> np.ndarray:
    """Illinois false position on many sign-change brackets at once."""
    a, b, fa, fb = a.copy(), b.copy(), fa.copy(), fb.copy()
    side = np.zeros(a.size, dtype=int)
    for _ in range(max_iter):
        live = (b - a) > xtol
        if not live.any():
            break
        c = np.where(live, (a * fb - b * fa) / (fb - fa), 0.5 * (a + b))
        # keep the trial point strictly inside the bracket
        c = np.clip(c, a + 0.25 * xtol, b - 0.25 * xtol)
        fc = np.zeros_like(c)
        fc[live] = func(c[live])
        exact = live & (fc == 0)
        a[exact] = b[exact] = c[exact]
        left = live & ~exact & (np.sign(fc) == np.sign(fa))
        right = live & ~exact & ~left
        a[left], fa[left] = c[left], fc[left]
        fb[left & (side == 1)] *= 0.5
        b[right], fb[right] = c[right], fc[right]
        fa[right & (side == -1)] *= 0.5
        side = np.where(left, 1, np.where(right, -1, side))
    return np.where(np.abs(fa) < np.abs(fb), a, b)


def _scan(ev: HardyEvaluator, lo: float, hi: float, step: float, xtol: float, tmax: float):
    ts = np.linspace(lo, hi, max(int(math.ceil((hi - lo) / step)) + 1, 2))
    zc = ev.z_complex(ts, tmax)
    if np.max(np.abs(zc.imag)) > 1e-7 * max(1.0, float(np.max(np.abs(zc.real)))):
        raise PrecisionError("Z(t) is not real on the scan grid", float(np.max(np.abs(zc.imag))))
    zr = zc.real
    idx = np.flatnonzero(np.sign(zr[:-1]) * np.sign(zr[1:]) < 0)
    if idx.size == 0:
        return []
    roots = _refine(lambda t: ev.z(t, tmax), ts[idx], ts[idx + 1], zr[idx], zr[idx + 1], xtol)
    return list(roots)


def find_zeros(chi: Character, height: float, *, oversample: float = 8.0,
               xtol: float = 1e-12, evaluator: HardyEvaluator | None = None) -> ZeroList:
    """Zeros of L(s, chi) on the critical line with |gamma| <= height.

    Scans Z(t) on a grid of step 2 pi / (oversample log(q (height + 2))),
    refines every sign change by vectorized false position, and cross-checks the count
    against the zero-density main term; on a mismatch the step is halved once
    and the result is marked incomplete if the count still disagrees.
    """
    if not height > 0:
        raise DomainError(f"height must be positive, got {height}")
    ev = evaluator or HardyEvaluator(chi)
    q = chi.q
    central = abs(ev.l_values(np.array([0.0]))[0]) < ACCURACY
    n_central = 2 if central else 0
    step = 2 * math.pi / (oversample * math.log(q * (height + 2)))
    for attempt in range(2):
        if chi.real:
            pos = [r for r in _scan(ev, 0.0, height, step, xtol, height) if r > xtol]
            roots = sorted([-r for r in pos] + pos)
        else:
            roots = sorted(r for r in _scan(ev, -height, height, step, xtol, height) if abs(r) > xtol)
        gam = np.array(roots, dtype=float)
        count = gam.size + n_central
        band, _ = count_band(q, max(height, 5 / 7))
        ok = abs(count - main_term(q, height, chi.parity)) <= max(band, 1.0)
        if ok:
            break
        step /= 2
    res = np.abs(ev.z(gam, height)) if gam.size else np.zeros(0)
    return ZeroList(chi, float(height), gam, res, n_central, bool(ok), step)


def gamma_stats(zeros: ZeroList) -> tuple[float, float, int, bool]:
    """(|gamma_chi|, lowest nonreal |gamma|, n_chi, complete)."""
    g = np.abs(zeros.ordinates)
    nonreal = float(g.min()) if g.size else math.inf
    lowest = 0.0 if zeros.n_central else nonreal
    return lowest, nonreal, zeros.n_central, zeros.complete
