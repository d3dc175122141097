"""Both sides of the Weil explicit formula and its Mestre generalization.

For a primitive character chi mod q and an admissible ``F`` dilated by ``T``,

    sum_gamma T F^(T gamma) = log(q/pi) - I_chi(F_T)
                              - 2 sum_n Re chi(n) F(log n / T) Lambda(n) / sqrt(n),

with all zeros on the critical line. The zero side is truncated at a height
``H``; :func:`zero_tail_bound` bounds what is left out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._quad import quad
from .archimedean import i_arch
from .characters import Character
from .errors import DataError, DomainError
from .primes import PrimeTable, weighted_sum
from .testfuncs import Family, TestFunction, fourier, phi_transform
from .zerofinder import ZeroList, count_band, find_zeros

PI = math.pi


@dataclass(frozen=True)
class WeilEvaluation:
    """Right-hand side of the explicit formula, term by term."""

    q: int
    chi: Character
    f: TestFunction
    T: float
    log_term: float
    arch_term: float
    prime_term: float
    rhs: float


def _require_primitive(chi: Character) -> None:
    if chi.principal or not chi.primitive:
        raise DomainError(f"{chi!r} must be primitive and nonprincipal")


def weil_rhs(chi: Character, f: TestFunction, T: float, table: PrimeTable) -> WeilEvaluation:
    """log(q/pi) - I_chi(F_T) - 2 sum Re chi(n) F_T(log n) Lambda(n)/sqrt(n)."""
    _require_primitive(chi)
    log_term = math.log(chi.q / PI)
    arch = i_arch(f, T, shift=chi.parity)
    prime = 2.0 * weighted_sum(f, T, table, twist=chi)
    return WeilEvaluation(chi.q, chi, f, float(T), log_term, arch, prime,
                          log_term - arch - prime)


def zero_side(zeros: ZeroList | Sequence[float], f: TestFunction, T: float) -> float:
    """sum over listed zeros of T F^(T gamma).

    A :class:`ZeroList` contributes its signed ordinates plus ``n_central``
    copies of gamma = 0; a plain sequence is read as signed ordinates.
    """
    if isinstance(zeros, ZeroList):
        gam, central = zeros.ordinates, zeros.n_central
    else:
        gam, central = np.asarray(zeros, dtype=float), 0
    total = float(np.sum(T * fourier(f, T * gam))) if gam.size else 0.0
    return total + central * T * fourier(f, 0.0)


def transform_majorant(f: TestFunction, t_min: float) -> Callable[[np.ndarray], np.ndarray]:
    """A decreasing M with |F^(t)| <= M(t) for t >= t_min, decaying like 1/t^2 or faster."""
    fam, p = f.family, f.param

    def falpha(alpha):
        def m(t):
            t2 = t * t
            return ((alpha - 1) * t2 / PI**2 + alpha + 1) * 4 * PI**2 / (t2 - PI**2) ** 2
        return m

    if fam is Family.TRIANGLE:
        return lambda t: 4.0 / (t * t)
    if fam in (Family.FALPHA, Family.KERNEL):
        need = 2 * PI
        m = falpha(1.0 if fam is Family.KERNEL else p)
    elif fam is Family.GALPHA:
        need = 2 * PI
        mf = falpha(p)
        m = lambda t: PI**2 / (2 * (p + 2)) * mf(t) * 4.0 / (t * t)  # noqa: E731
    elif fam is Family.LTHETA:
        need = 2 * max(p, 1.0)
        from .testfuncs import _ltheta_norm
        norm = _ltheta_norm(p)
        m = lambda t: 4 * t * t / ((t * t - p * p) ** 2 * norm)  # noqa: E731
    else:
        raise DomainError(f"{f.label()} has no quadratic-decay transform majorant")
    if t_min < need:
        raise DomainError(f"majorant for {f.label()} needs T*height >= {need:.4g}, got {t_min:.4g}")
    return m


def zero_tail_bound(q: int, f: TestFunction, T: float, height: float) -> float:
    """Upper bound on |sum_{|gamma| > height} T F^(T gamma)|.

    With g(t) = T M(T t) for a decreasing majorant M and N(t) squeezed between
    main(t) -/+ band(t), integration by parts gives

        sum_{|gamma| > H} g(|gamma|) <= 2 g(H) band(H) + int_H^inf g (main' + band') dt.
    """
    if not height >= 1:
        raise DomainError(f"height must be at least 1, got {height}")
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    _, applies = count_band(q, height)
    if not applies:
        raise DomainError(f"zero-count band does not apply at q={q}, height={height}")
    m = transform_majorant(f, T * height)

    def g(t):
        return T * m(T * t)

    def density(t):
        ell = math.log(q * (t + 2) / (2 * PI))
        main_d = math.log(q * t / (2 * PI)) / PI
        band_d = (0.22737 + 2.0 / (1.0 + ell)) / (t + 2)
        return g(t) * (main_d + band_d)

    band, _ = count_band(q, height)
    tail = quad(density, height, math.inf, tol=1e-12, rtol=1e-10)
    return 2.0 * g(height) * band + tail


@dataclass(frozen=True)
class Balance:
    """One explicit-formula balance check."""

    rhs: WeilEvaluation
    zero_side: float
    tail_bound: float
    height: float
    zeros_complete: bool

    @property
    def residual(self) -> float:
        return self.rhs.rhs - self.zero_side

    @property
    def ok(self) -> bool:
        return abs(self.residual) <= self.tail_bound + 1e-6


def balance(chi: Character, f: TestFunction, T: float, height: float, table: PrimeTable,
            zeros: ZeroList | None = None) -> Balance:
    """Compare the prime side with the zero side truncated at ``height``."""
    zeros = zeros if zeros is not None else find_zeros(chi, height)
    return Balance(weil_rhs(chi, f, T, table), zero_side(zeros, f, T),
                   zero_tail_bound(chi.q, f, T, height), float(height), zeros.complete)


# ---------------------------------------------------------------------------
# general L-functions


@dataclass(frozen=True)
class MestreData:
    """Data of an L-function of degree m with gamma shifts ``mu``.

    ``coeff_source(p, k)`` takes integer arrays of primes and exponents and
    returns sum_j alpha_j(p)^k (complex, same shape).
    """

    N: float
    m: int
    mu: tuple[complex, ...]
    r_pole: int
    theta: float
    coeff_source: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def __post_init__(self):
        if not self.N > 0:
            raise DomainError("conductor N must be positive")
        if self.m < 1 or len(self.mu) != self.m:
            raise DomainError("need m >= 1 gamma shifts")
        if any(complex(u).real <= -1 for u in self.mu):
            raise DomainError("every gamma shift must have real part above -1")
        if not 0 <= self.r_pole <= self.m:
            raise DomainError("r_pole must lie in [0, m]")
        if not 0 <= self.theta <= 1:
            raise DomainError("theta must lie in [0, 1]")

    @property
    def analytic_conductor(self) -> float:
        return self.N * math.prod(abs(complex(u)) + 3 for u in self.mu)


def dirichlet_data(chi: Character) -> MestreData:
    """MestreData of L(s, chi) for a primitive character."""
    _require_primitive(chi)
    return MestreData(N=chi.q, m=1, mu=(complex(chi.parity),), r_pole=0, theta=0.0,
                      coeff_source=lambda p, k: chi(p.astype(np.int64) ** k))


def mestre_rhs(data: MestreData, f: TestFunction, T: float, table: PrimeTable) -> float:
    """Right-hand side of Mestre's explicit formula for F_T."""
    if not f.compact:
        raise DomainError(f"{f.label()} is not compactly supported")
    total = math.log(data.N / PI**data.m)
    if data.r_pole:
        total += data.r_pole * (phi_transform(f, T, 0.0) + phi_transform(f, T, 1.0)).real
    total -= sum(i_arch(f, T, shift=complex(u).real) for u in data.mu)
    total -= 2.0 * _mestre_prime_sum(data, f, T, table)
    for u in data.mu:
        u = complex(u)
        if u.real <= -0.5:
            w = 1.0 if u.real < -0.5 else 0.5
            total -= w * (phi_transform(f, T, -u) + phi_transform(f, T, 1 + u)).real
    return total


def _mestre_prime_sum(data: MestreData, f: TestFunction, T: float, table: PrimeTable) -> float:
    from .testfuncs import evaluate

    x = math.exp(f.support_halfwidth * T)
    n, logp = table.prime_powers(x)
    if n.size == 0:
        return 0.0
    p = np.rint(np.exp(logp)).astype(np.int64)
    k = np.rint(np.log(n) / logp).astype(np.int64)
    try:
        coeffs = np.asarray(data.coeff_source(p, k), dtype=complex)
    except (KeyError, IndexError) as exc:
        raise DataError(f"coefficient source has a gap: {exc}") from exc
    if coeffs.shape != n.shape or not np.all(np.isfinite(coeffs)):
        raise DataError("coefficient source returned missing or non-finite values")
    weights = evaluate(f, k * logp / T) * logp / np.sqrt(n.astype(float))
    return float(np.sum(coeffs.real * weights))
