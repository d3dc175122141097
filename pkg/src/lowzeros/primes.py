"""Prime tables, prime powers with von Mangoldt weights, and weighted prime sums."""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .errors import CapacityError, DataError
from .testfuncs import TestFunction, evaluate

MAX_LIMIT = 10**10
SEGMENT = 1 << 18
CACHE_MAGIC = b"EFZ1"
_PI_1E6 = 78498


def _small_primes(n: int) -> np.ndarray:
    """Plain sieve of Eratosthenes up to n inclusive."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def segmented_sieve(limit: int) -> np.ndarray:
    """All primes <= limit, sieving segments of 2^18 integers."""
    base = _small_primes(math.isqrt(limit))
    chunks = [base]
    lo = math.isqrt(limit) + 1
    while lo <= limit:
        hi = min(lo + SEGMENT, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            seg[start - lo:: p] = False
        chunks.append(np.flatnonzero(seg).astype(np.int64) + lo)
        lo = hi
    return np.concatenate(chunks)


@dataclass(frozen=True)
class PrimeTable:
    """Immutable table of the primes up to ``limit``."""

    limit: int
    primes: np.ndarray = field(repr=False)
    built_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc), compare=False)

    def __post_init__(self):
        self.primes.setflags(write=False)

    def __len__(self) -> int:
        return int(self.primes.size)

    def count(self, x: float) -> int:
        """pi(x)."""
        self._need(x)
        return int(np.searchsorted(self.primes, math.floor(x), side="right"))

    def _need(self, x: float) -> None:
        if x > self.limit:
            raise CapacityError(f"x = {x:.6g} exceeds the prime table limit {self.limit}")

    def prime_powers(self, x: float) -> tuple[np.ndarray, np.ndarray]:
        """Prime powers n <= x (sorted) and the matching log p = Lambda(n)."""
        self._need(x)
        x = int(math.floor(x))
        ps = self.primes[: np.searchsorted(self.primes, x, side="right")]
        ns, logs = [ps], [np.log(ps.astype(float))]
        k = 2
        while ps.size and 2**k <= x:
            root = int(round(x ** (1.0 / k))) + 1
            while root**k > x:
                root -= 1
            base = ps[: np.searchsorted(ps, root, side="right")]
            if base.size:
                ns.append(base**k)
                logs.append(np.log(base.astype(float)))
            k += 1
        n = np.concatenate(ns)
        lg = np.concatenate(logs)
        order = np.argsort(n, kind="stable")
        return n[order], lg[order]


def build_table(limit: int, cache: str | Path | None = None) -> PrimeTable:
    """Sieve the primes up to ``limit`` (2 <= limit <= 1e10).

    With ``cache`` set, a matching on-disk table is reused and a fresh one is
    written otherwise.
    """
    limit = int(limit)
    if not 2 <= limit <= MAX_LIMIT:
        raise CapacityError(f"prime table limit must lie in [2, {MAX_LIMIT}], got {limit}")
    if cache is not None:
        loaded = load_table(cache, limit)
        if loaded is not None:
            return loaded
    primes = segmented_sieve(limit)
    if limit >= 10**6:
        got = int(np.searchsorted(primes, 10**6, side="right"))
        if got != _PI_1E6:
            raise DataError(f"sieve self-check failed: pi(1e6) = {got}")
    table = PrimeTable(limit=limit, primes=primes)
    if cache is not None:
        save_table(table, cache)
    return table


def save_table(table: PrimeTable, path: str | Path) -> None:
    """Write the binary cache: magic, u64 limit, then u32 gaps between primes."""
    gaps = np.diff(table.primes, prepend=0).astype("<u4")
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<Q", table.limit))
        fh.write(gaps.tobytes())


def load_table(path: str | Path, limit: int) -> PrimeTable | None:
    """Read a cache written by :func:`save_table`; None if absent or for another limit."""
    path = Path(path)
    if not path.exists():
        return None
    raw = path.read_bytes()
    if raw[:4] != CACHE_MAGIC or len(raw) < 12:
        raise DataError(f"{path} is not a prime-table cache")
    (stored,) = struct.unpack("<Q", raw[4:12])
    if stored != limit:
        return None
    gaps = np.frombuffer(raw[12:], dtype="<u4").astype(np.int64)
    return PrimeTable(limit=limit, primes=np.cumsum(gaps))


def chebyshev_psi(x: float, table: PrimeTable) -> float:
    """psi(x) = sum of log p over prime powers p^k <= x."""
    if x < 2:
        return 0.0
    _, logs = table.prime_powers(x)
    return float(np.sum(logs))


def weighted_sum(f: TestFunction, T: float, table: PrimeTable, twist=None) -> float:
    """Sum over prime powers n <= e^{cT} of w(n) f(log n / T) Lambda(n)/sqrt(n).

    ``twist`` is None (w = 1) or any object with a ``real_weights(n)`` method,
    such as a :class:`~lowzeros.characters.Character` (Re chi(n)) or a
    :class:`~lowzeros.characters.Kronecker` symbol.
    """
    if not f.compact:
        raise CapacityError(f"{f.label()} has unbounded support; the prime sum is infinite")
    if not T > 0:
        raise CapacityError(f"T must be positive, got {T}")
    x = math.exp(f.support_halfwidth * T)
    if x > table.limit:
        raise CapacityError(f"e^(cT) = {x:.6g} exceeds the prime table limit {table.limit}")
    n, logs = table.prime_powers(x)
    if n.size == 0:
        return 0.0
    terms = evaluate(f, np.log(n.astype(float)) / T) * logs / np.sqrt(n.astype(float))
    if twist is not None:
        terms = terms * twist.real_weights(n)
    return float(np.sum(terms))


def pi_progression(x: float, q: int, a: int, table: PrimeTable) -> int:
    """Number of primes p <= x with p = a (mod q)."""
    table._need(x)
    ps = table.primes[: np.searchsorted(table.primes, math.floor(x), side="right")]
    return int(np.count_nonzero(ps % q == a % q))
