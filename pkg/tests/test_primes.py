"""Tests for the sieve, prime-power sums and progression counts."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowzeros.characters import build_characters, euler_phi
from lowzeros.errors import CapacityError, DataError
from lowzeros.primes import (build_table, chebyshev_psi, load_table, pi_progression,
                             save_table, segmented_sieve, weighted_sum)
from lowzeros.testfuncs import FAlpha, GBetaMinorant, Kernel, LTheta, Triangle


def _naive_primes(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


class TestSieve:
    def test_small(self):
        assert len(build_table(100)) == 25

    def test_million(self, table_1e6):
        assert len(table_1e6) == 78498

    def test_below_minimum(self):
        with pytest.raises(CapacityError):
            build_table(1)

    def test_above_maximum(self):
        with pytest.raises(CapacityError):
            build_table(10**11)

    @given(st.integers(2, 3000))
    def test_matches_trial_division(self, n):
        assert segmented_sieve(n).tolist() == _naive_primes(n)

    def test_segment_boundaries(self):
        # crosses several 2^18 segments
        p = segmented_sieve(1_000_003)
        assert p[-1] == 1_000_003
        assert np.all(np.diff(p) > 0)

    def test_cache_roundtrip(self, tmp_path):
        path = tmp_path / "primes.bin"
        t = build_table(50_000, cache=path)
        assert path.read_bytes()[:4] == b"EFZ1"
        again = load_table(path, 50_000)
        np.testing.assert_array_equal(again.primes, t.primes)
        assert load_table(path, 60_000) is None

    def test_cache_rejects_garbage(self, tmp_path):
        path = tmp_path / "bad.bin"
        path.write_bytes(b"nope" + bytes(20))
        with pytest.raises(DataError):
            load_table(path, 100)


class TestPsi:
    def test_ten(self, table_1e6):
        expected = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
        assert chebyshev_psi(10, table_1e6) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(7.832, abs=1e-3)

    def test_million(self, table_1e6):
        x = 1e6
        psi = chebyshev_psi(x, table_1e6)
        assert abs(psi - x) < x / math.log(x)
        assert psi < 1.039 * x

    def test_capacity(self):
        with pytest.raises(CapacityError):
            chebyshev_psi(1000, build_table(100))

    @given(st.integers(2, 5000))
    def test_matches_enumeration(self, x):
        table = build_table(5000)
        total = 0.0
        for p in _naive_primes(x):
            pk = p
            while pk <= x:
                total += math.log(p)
                pk *= p
        assert chebyshev_psi(x, table) == pytest.approx(total, rel=1e-12)


class TestWeightedSum:
    def test_triangle_small(self, table_1e6):
        T = math.log(4)
        expected = (math.log(2) / math.sqrt(2) * (1 - math.log(2) / T)
                    + math.log(3) / math.sqrt(3) * (1 - math.log(3) / T))
        assert weighted_sum(Triangle(), T, table_1e6) == pytest.approx(expected, abs=1e-14)

    def test_lemma_growth(self, table_1e6):
        alpha, T = 3.0, 6.3
        ratio = weighted_sum(FAlpha(alpha), T, table_1e6) / ((alpha - 1) * math.exp(T / 2) / T)
        assert ratio <= 4 + 8 / T

    def test_twist_bounded_by_untwisted(self, table_1e6):
        chi = build_characters(5)[1]
        twisted = weighted_sum(Kernel(), 5.0, table_1e6, chi)
        plain = weighted_sum(Kernel(), 5.0, table_1e6)
        assert isinstance(twisted, float)
        assert abs(twisted) <= plain

    @pytest.mark.parametrize("f", [Triangle(), Kernel(), LTheta(1.0)], ids=lambda f: f.label())
    def test_monotone_in_T(self, f, table_1e6):
        Ts = np.linspace(0.5, 13.0, 120)
        vals = [weighted_sum(f, T, table_1e6) for T in Ts]
        assert np.all(np.diff(vals) >= -1e-12)

    def test_unbounded_support(self, table_1e6):
        with pytest.raises(CapacityError):
            weighted_sum(GBetaMinorant(1), 2.0, table_1e6)

    def test_table_too_small(self):
        with pytest.raises(CapacityError):
            weighted_sum(Triangle(), 10.0, build_table(100))

    @pytest.mark.parametrize("q", [101, 211])
    def test_character_average_shape(self, q, table_1e6):
        # sum over nonprincipal chi of Re chi(n) is phi(q) - 1 on n = 1 (mod q) and -1 otherwise
        alpha = 10.0
        f = FAlpha(alpha)
        table = build_characters(q)
        ratios = []
        for T in np.linspace(2.0, math.log(10**6), 12):
            total = sum(weighted_sum(f, T, table_1e6, chi) for chi in table if not chi.principal)
            scale = alpha * math.exp(T / 2) / T + alpha * math.sqrt(q) * math.log(q)
            ratios.append(abs(total) / scale)
        assert max(ratios) <= 10


class TestProgressions:
    def test_four_one(self, table_1e6):
        assert pi_progression(100, 4, 1, table_1e6) == 11

    def test_four_three(self, table_1e6):
        assert pi_progression(100, 4, 3, table_1e6) == 13

    def test_trivial_modulus(self, table_1e6):
        assert pi_progression(10, 1, 0, table_1e6) == 4

    @pytest.mark.parametrize("q", [3, 5, 8, 12])
    def test_brun_titchmarsh(self, q, table_1e6):
        ts = np.unique(np.geomspace(2 * q, 10**6, 60).astype(int))
        for a in range(1, q):
            if math.gcd(a, q) != 1:
                continue
            for t in ts:
                bound = 2 * t / (euler_phi(q) * math.log(t / q))
                assert pi_progression(t, q, a, table_1e6) <= bound
