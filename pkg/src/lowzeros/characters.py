"""Dirichlet characters, Kronecker symbols and fundamental discriminants.

A character mod q is stored as an exponent vector over a fixed set of cyclic
generators of (Z/qZ)^*: one generator per odd prime power, and for the
2-power part ``<-1>`` (mod 4) or ``<-1> x <5>`` (mod 2^k, k >= 3). Values are
roots of unity indexed by an integer phase modulo the lcm of the factor orders,
so equal values compare exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from .errors import CapacityError, DomainError


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    n = int(n)
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def _primitive_root_prime_power(p: int, k: int) -> int:
    m = p - 1
    qs = list(factorize(m)) if m > 1 else []
    g = 2 if p > 2 else 1
    while any(pow(g, m // r, p) == 1 for r in qs):
        g += 1
    if k >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class CyclicFactor:
    """One cyclic factor of (Z/qZ)^*, acting through residues mod ``modulus``."""

    prime: int
    modulus: int
    generator: int
    order: int
    dlog: np.ndarray = field(repr=False, compare=False)  # -1 where not a unit


def _odd_factor(p: int, k: int) -> CyclicFactor:
    mod = p**k
    g = _primitive_root_prime_power(p, k)
    order = mod // p * (p - 1)
    dlog = np.full(mod, -1, dtype=np.int64)
    v = 1
    for e in range(order):
        dlog[v] = e
        v = v * g % mod
    return CyclicFactor(p, mod, g, order, dlog)


def _two_factors(k: int) -> list[CyclicFactor]:
    mod = 2**k
    if k == 1:
        return []
    if k == 2:
        dlog = np.array([-1, 0, -1, 1], dtype=np.int64)
        return [CyclicFactor(2, 4, 3, 2, dlog)]
    half = mod // 4
    da = np.full(mod, -1, dtype=np.int64)
    db = np.full(mod, -1, dtype=np.int64)
    v = 1
    for b in range(half):
        da[v], db[v] = 0, b
        da[mod - v], db[mod - v] = 1, b
        v = v * 5 % mod
    return [CyclicFactor(2, mod, mod - 1, 2, da), CyclicFactor(2, mod, 5, half, db)]


def _roots_of_unity(L: int) -> np.ndarray:
    k = np.arange(L)
    roots = np.exp(2j * np.pi * k / L)
    for j, val in ((0, 1), (1, 1j), (2, -1), (3, -1j)):
        hit = (4 * k) % L == 0
        roots[hit & (4 * k // L == j)] = val
    return roots


@dataclass(frozen=True, eq=False)
class Character:
    """A Dirichlet character mod ``q``.

    ``index`` is the exponent vector over the table's cyclic factors and
    ``label`` the position in :attr:`CharacterTable.characters`.
    """

    table: "CharacterTable" = field(repr=False)
    label: int
    index: tuple[int, ...]
    conductor: int
    parity: int
    order: int

    @property
    def q(self) -> int:
        return self.table.q

    @property
    def primitive(self) -> bool:
        return self.conductor == self.table.q

    @property
    def principal(self) -> bool:
        return not any(self.index)

    @property
    def real(self) -> bool:
        return self.order <= 2

    def phases(self, n) -> np.ndarray:
        """Integer phase k with chi(n) = exp(2 pi i k / L); -1 where gcd(n, q) > 1."""
        return self.table._phases(np.asarray(self.index)[None, :], n)[0]

    def __call__(self, n):
        k = self.phases(n)
        vals = np.where(k >= 0, self.table.roots[np.maximum(k, 0)], 0.0)
        return complex(vals) if np.ndim(n) == 0 else vals

    def real_weights(self, n) -> np.ndarray:
        return np.real(self(np.asarray(n)))

    @cached_property
    def values(self) -> np.ndarray:
        """chi(0), chi(1), ..., chi(q-1)."""
        return self(np.arange(self.table.q))

    def conj(self) -> "Character":
        idx = tuple((-e) % f.order for e, f in zip(self.index, self.table.factors))
        return self.table.by_index(idx)

    def __repr__(self) -> str:
        return (f"Character(q={self.q}, label={self.label}, index={self.index}, "
                f"conductor={self.conductor}, parity={self.parity})")


class CharacterTable:
    """The full group of Dirichlet characters modulo ``q``."""

    def __init__(self, q: int):
        q = int(q)
        if q <= 1:
            raise DomainError(f"modulus must exceed 1, got {q}")
        if q > 10**6:
            raise CapacityError(f"modulus {q} exceeds the supported 1e6")
        self.q = q
        self.factorization = factorize(q)
        factors: list[CyclicFactor] = []
        for p, k in sorted(self.factorization.items()):
            factors.extend(_two_factors(k) if p == 2 else [_odd_factor(p, k)])
        self.factors: tuple[CyclicFactor, ...] = tuple(factors)
        orders = [f.order for f in factors]
        self.lcm = reduce(lambda a, b: a * b // math.gcd(a, b), orders, 1)
        self.roots = _roots_of_unity(self.lcm)
        grids = np.meshgrid(*[np.arange(m) for m in orders], indexing="ij") if orders else []
        idx = np.stack([g.ravel() for g in grids], axis=1) if orders else np.zeros((1, 0), int)
        self._index_matrix = idx
        self._by_index = {}
        chars = []
        for label, row in enumerate(idx):
            tup = tuple(int(v) for v in row)
            ch = Character(self, label, tup, self._conductor(tup), 0, self._order(tup))
            object.__setattr__(ch, "parity", self._parity(ch))
            chars.append(ch)
            self._by_index[tup] = ch
        self.characters: tuple[Character, ...] = tuple(chars)

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i: int) -> Character:
        return self.characters[i]

    def by_index(self, index: tuple[int, ...]) -> Character:
        return self._by_index[tuple(index)]

    @property
    def principal(self) -> Character:
        return self.characters[0]

    def primitive_characters(self) -> list[Character]:
        return [c for c in self.characters if c.primitive]

    def _phases(self, index_rows: np.ndarray, n) -> np.ndarray:
        n = np.asarray(n, dtype=np.int64)
        out = np.zeros(index_rows.shape[:1] + n.shape, dtype=np.int64)
        unit = np.ones(n.shape, dtype=bool)
        for i, f in enumerate(self.factors):
            d = f.dlog[n % f.modulus]
            unit &= d >= 0
            scale = self.lcm // f.order
            out += np.multiply.outer(index_rows[:, i] * scale, d)
        unit &= np.gcd(n, self.q) == 1
        out %= self.lcm
        return np.where(unit, out, -1)

    def phase_matrix(self) -> np.ndarray:
        """Phases of every character (rows) at n = 0..q-1 (columns); -1 off units."""
        return self._phases(self._index_matrix, np.arange(self.q))

    def value_matrix(self) -> np.ndarray:
        k = self.phase_matrix()
        return np.where(k >= 0, self.roots[np.maximum(k, 0)], 0.0)

    def _order(self, index: tuple[int, ...]) -> int:
        o = 1
        for e, f in zip(index, self.factors):
            d = f.order // math.gcd(e, f.order)
            o = o * d // math.gcd(o, d)
        return o

    def _conductor(self, index: tuple[int, ...]) -> int:
        cond = 1
        two = [(e, f) for e, f in zip(index, self.factors) if f.prime == 2]
        for e, f in zip(index, self.factors):
            if f.prime == 2:
                continue
            d = f.order // math.gcd(e, f.order)
            if d > 1:
                v = 0
                while d % f.prime == 0:
                    d //= f.prime
                    v += 1
                cond *= f.prime ** (v + 1)
        if len(two) == 1:
            cond *= 4 if two[0][0] % 2 else 1
        elif len(two) == 2:
            (ea, _), (eb, fb) = two
            d = fb.order // math.gcd(eb, fb.order)
            if d > 1:
                cond *= 4 * d
            elif ea % 2:
                cond *= 4
        return cond

    def _parity(self, ch: Character) -> int:
        k = ch.phases(self.q - 1)
        return 0 if int(k) == 0 else 1


def build_characters(q: int) -> CharacterTable:
    """All phi(q) Dirichlet characters modulo q."""
    return CharacterTable(q)


def chi_eval(chi: Character, n: int) -> complex:
    return chi(n)


def orthogonality_sums(table: CharacterTable) -> np.ndarray:
    """Sum over nonprincipal chi of chi(n), for n = 1..q (index 0 is n = 1)."""
    vals = table.value_matrix()
    total = vals.sum(axis=0) - vals[0]
    return np.roll(total, -1)


def conductor_average(q: int, table: CharacterTable | None = None) -> tuple[float, float]:
    """Average log-conductor over all characters mod q, and its closed form."""
    if q <= 2:
        raise DomainError("conductor_average needs q > 2")
    table = table or build_characters(q)
    lhs = float(np.mean([math.log(c.conductor) for c in table]))
    rhs = math.log(q) - sum(math.log(p) / (p - 1) for p in table.factorization)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Kronecker symbol and fundamental discriminants

_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d | n) via binary quadratic reciprocity."""
    a, b = int(d), int(n)
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0
    v = 0
    while b % 2 == 0:
        v += 1
        b //= 2
    k = 1 if v % 2 == 0 else _TAB2[a & 7]
    if b < 0:
        b = -b
        if a < 0:
            k = -k
    while True:
        if a == 0:
            return k if b == 1 else 0
        v = 0
        while a % 2 == 0:
            v += 1
            a //= 2
        if v % 2:
            k *= _TAB2[b & 7]
        if a & b & 2:
            k = -k
        r = abs(a)
        a = b % r
        b = r


@dataclass(frozen=True)
class Kronecker:
    """The quadratic character n -> (d | n), usable as a prime-sum twist."""

    d: int

    @cached_property
    def _period_table(self) -> np.ndarray:
        period = 4 * abs(self.d)
        return np.array([kronecker(self.d, m) for m in range(period)], dtype=float)

    def __call__(self, n: int) -> int:
        return kronecker(self.d, n)

    def real_weights(self, n) -> np.ndarray:
        n = np.asarray(n, dtype=np.int64)
        if np.any(n <= 0):
            raise DomainError("Kronecker twist weights need n >= 1")
        tab = self._period_table
        return tab[n % tab.size]


def _squarefree_mask(n: int) -> np.ndarray:
    mask = np.ones(n + 1, dtype=bool)
    mask[0] = False
    for p in range(2, math.isqrt(n) + 1):
        mask[p * p:: p * p] = False
    return mask


def is_fundamental_discriminant(d: int) -> bool:
    d = int(d)
    if d in (0, 1):
        return False
    sqf = lambda m: all(k == 1 for k in factorize(abs(m)).values())  # noqa: E731
    if d % 4 == 1:
        return sqf(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and sqf(m)
    return False


def fundamental_discriminants_in(lo: int, hi: int) -> list[int]:
    """Fundamental discriminants d with lo <= d <= hi, sorted by (|d|, d)."""
    lo, hi = int(lo), int(hi)
    top = max(abs(lo), abs(hi), 4)
    sqf = _squarefree_mask(top)
    d = np.arange(lo, hi + 1, dtype=np.int64)
    d = d[(d != 0) & (d != 1)]
    ad = np.abs(d)
    case1 = (d % 4 == 1) & sqf[ad]
    m = d // 4
    case2 = (d % 4 == 0) & np.isin(m % 4, (2, 3)) & sqf[np.abs(m)]
    out = d[case1 | case2]
    order = np.lexsort((out, np.abs(out)))
    return [int(v) for v in out[order]]


def fundamental_discriminants(D: int) -> list[int]:
    """Fundamental discriminants with |d| <= D (both signs), sorted by |d|."""
    if D < 3:
        raise DomainError("fundamental_discriminants needs D >= 3")
    return fundamental_discriminants_in(-D, D)


def fundamental_discriminants_window(D: int) -> list[int]:
    """Fundamental discriminants d in the dyadic window [D, 2D]."""
    if D < 1:
        raise DomainError("the dyadic window needs D >= 1")
    return fundamental_discriminants_in(D, 2 * D)


def jutila_ratio(N: int, D: int) -> float:
    """Mean-square monitor for quadratic character sums.

    Returns sum_{n <= N, n not a square} |sum_{|d| <= D} chi_d(n)|^2
    divided by N D (log N)^10.
    """
    N, D = int(N), int(D)
    if N < 1 or D < 3:
        raise DomainError("jutila_ratio needs N >= 1 and D >= 3")
    if N * D > 10**9:
        raise CapacityError(f"N*D = {N * D} exceeds the 1e9 direct-evaluation budget")
    ds = np.array(fundamental_discriminants(D), dtype=np.int64)
    total = 0.0
    for n in range(2, N + 1):
        r = math.isqrt(n)
        if r * r == n:
            continue
        vals = np.ones(ds.size)
        for p, k in factorize(n).items():
            if k % 2 == 0:
                vals *= np.array([kronecker(int(dd), p) != 0 for dd in ds], dtype=float) \
                    if p > 2 else (ds % 2 != 0)
                continue
            vals *= _kronecker_prime(ds, p)
        s = vals.sum()
        total += s * s
    if total == 0.0:
        return 0.0
    return total / (N * D * math.log(N) ** 10)


def _kronecker_prime(ds: np.ndarray, p: int) -> np.ndarray:
    """(d | p) for an array of discriminants and a single prime p."""
    if p == 2:
        r = ds % 8
        return np.select([ds % 2 == 0, (r == 1) | (r == 7)], [0.0, 1.0], -1.0)
    res = ds % p
    squares = np.zeros(p, dtype=bool)
    squares[(np.arange(1, p) ** 2) % p] = True
    return np.where(res == 0, 0.0, np.where(squares[res], 1.0, -1.0))
