"""Tests for Dirichlet characters, Kronecker symbols and fundamental discriminants."""

import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowzeros.characters import (Kronecker, build_characters, chi_eval, conductor_average,
                                 euler_phi, factorize, fundamental_discriminants,
                                 fundamental_discriminants_window, is_fundamental_discriminant,
                                 jutila_ratio, kronecker, orthogonality_sums)
from lowzeros.errors import CapacityError, DomainError


def _brute_conductor(chi):
    """Smallest divisor d of q such that chi is trivial on units = 1 (mod d)."""
    q = chi.q
    vals = chi.values
    for d in sorted(k for k in range(1, q + 1) if q % k == 0):
        if all(abs(vals[n] - 1) < 1e-9 for n in range(1, q) if math.gcd(n, q) == 1 and n % d == 1 % d):
            return d
    return q


class TestCharacterGroup:
    """Group structure, values and conductors."""

    def test_mod5(self):
        table = build_characters(5)
        assert len(table) == 4
        assert sorted(c.order for c in table) == [1, 2, 4, 4]

    def test_mod8_all_real(self):
        table = build_characters(8)
        assert len(table) == 4
        assert all(c.real for c in table)

    def test_mod12_conductors(self):
        table = build_characters(12)
        assert len(table) == 4
        assert sorted(c.conductor for c in table if not c.principal) == [3, 4, 12]

    @pytest.mark.parametrize("q", [3, 4, 5, 8, 9, 12, 16, 20, 27, 32, 60, 105, 128])
    def test_conductor_matches_definition(self, q):
        for chi in build_characters(q):
            assert chi.conductor == _brute_conductor(chi)

    def test_principal_value(self):
        assert chi_eval(build_characters(6).principal, 5) == 1

    def test_mod4_value(self):
        chi = [c for c in build_characters(4) if not c.principal][0]
        assert chi_eval(chi, 3) == -1

    @given(st.integers(3, 200))
    def test_zero_at_modulus(self, q):
        for chi in build_characters(q):
            assert chi_eval(chi, q) == 0

    @given(st.integers(2, 300))
    def test_count_is_phi(self, q):
        assert len(build_characters(q)) == euler_phi(q)

    @given(st.integers(3, 150), st.integers(1, 10**6), st.integers(1, 10**6))
    def test_completely_multiplicative(self, q, m, n):
        for chi in build_characters(q):
            assert abs(chi(m * n) - chi(m) * chi(n)) < 1e-12

    @given(st.integers(3, 300))
    def test_half_are_odd(self, q):
        assert sum(c.parity for c in build_characters(q)) == euler_phi(q) // 2

    @given(st.integers(3, 200))
    def test_values_are_roots_of_unity(self, q):
        for chi in build_characters(q):
            v = chi.values
            units = [n for n in range(q) if math.gcd(n, q) == 1]
            assert np.allclose(np.abs(v[units]), 1.0, atol=1e-14)
            assert abs(v[1] - 1) < 1e-15
            assert chi.parity == (0 if abs(chi(q - 1) - 1) < 1e-9 else 1)

    def test_conjugate(self):
        table = build_characters(13)
        for chi in table:
            np.testing.assert_allclose(chi.conj().values, np.conj(chi.values), atol=1e-14)

    def test_orthogonality_mod7(self):
        sums = orthogonality_sums(build_characters(7))
        assert sums[0] == pytest.approx(5)
        np.testing.assert_allclose(sums[1:6], -1, atol=1e-13)
        assert abs(sums[6]) < 1e-13

    @pytest.mark.parametrize("q", [1, 0, -3])
    def test_domain(self, q):
        with pytest.raises(DomainError):
            build_characters(q)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            build_characters(10**6 + 3)


class TestConductorAverage:
    def test_prime(self):
        lhs, rhs = conductor_average(101)
        expected = math.log(101) - math.log(101) / 100
        assert lhs == pytest.approx(expected, abs=1e-12)
        assert rhs == pytest.approx(expected, abs=1e-12)

    def test_twelve(self):
        lhs, rhs = conductor_average(12)
        expected = math.log(12) - math.log(2) - math.log(3) / 2
        assert lhs == pytest.approx(expected, abs=1e-12)
        assert rhs == pytest.approx(expected, abs=1e-12)

    def test_thirty(self):
        lhs, rhs = conductor_average(30)
        assert lhs == pytest.approx(rhs, abs=1e-9)


class TestKronecker:
    def test_minus_four(self):
        assert kronecker(-4, 3) == -1

    def test_five_four(self):
        assert kronecker(5, 4) == 1

    @given(st.integers(-500, 500), st.integers(1, 500))
    def test_zero_when_not_coprime(self, d, n):
        if math.gcd(d, n) > 1:
            assert kronecker(d, n) == 0

    @given(st.integers(1, 10**4).filter(lambda p: p > 2 and all(p % k for k in range(2, int(p**0.5) + 1))),
           st.integers(-10**4, 10**4))
    def test_euler_criterion(self, p, d):
        expected = pow(d % p, (p - 1) // 2, p)
        expected = -1 if expected == p - 1 else expected
        assert kronecker(d, p) == expected

    @pytest.mark.parametrize("d", [-8, -7, -4, -3, 5, 8, 12, 13])
    def test_multiplicative_and_periodic(self, d):
        vals = [kronecker(d, n) for n in range(0, 1001)]
        for m, n in product(range(1, 40), range(1, 25)):
            assert kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n)
        for n in range(1, 1001 - abs(d)):
            assert vals[n + abs(d)] == vals[n]

    def test_twist_weights(self):
        k = Kronecker(-4)
        n = np.arange(1, 200)
        np.testing.assert_array_equal(k.real_weights(n), [kronecker(-4, int(m)) for m in n])

    def test_matches_character_mod_prime(self):
        # (d | .) for d = 13 is the quadratic character mod 13
        chi = [c for c in build_characters(13) if c.order == 2][0]
        for n in range(1, 60):
            assert chi(n) == pytest.approx(kronecker(13, n), abs=1e-14)


class TestDiscriminants:
    def test_up_to_eight(self):
        assert sorted(fundamental_discriminants(8)) == [-8, -7, -4, -3, 5, 8]

    def test_up_to_three(self):
        assert fundamental_discriminants(3) == [-3]

    def test_density(self):
        D = 10**5
        ratio = len(fundamental_discriminants(D)) / D
        assert abs(ratio / (6 / math.pi**2) - 1) < 0.02

    @given(st.integers(-3000, 3000))
    def test_scan_matches_predicate(self, d):
        if abs(d) >= 3:
            assert (d in fundamental_discriminants(abs(d))) == is_fundamental_discriminant(d)

    def test_window(self):
        w = fundamental_discriminants_window(50)
        assert all(50 <= d <= 100 for d in w)
        assert w == [d for d in range(50, 101) if is_fundamental_discriminant(d)]

    def test_too_small(self):
        with pytest.raises(DomainError):
            fundamental_discriminants(2)


class TestJutila:
    def _direct(self, N, D):
        ds = fundamental_discriminants(D)
        total = 0
        for n in range(2, N + 1):
            if math.isqrt(n) ** 2 == n:
                continue
            total += sum(kronecker(d, n) for d in ds) ** 2
        return total / (N * D * math.log(N) ** 10) if total else 0.0

    def test_small_exact(self):
        assert jutila_ratio(10, 10) == pytest.approx(self._direct(10, 10), rel=1e-12)

    def test_bounded(self):
        r = jutila_ratio(100, 100)
        assert 0 < r < 1
        assert r == pytest.approx(self._direct(100, 100), rel=1e-12)

    def test_n_one(self):
        assert jutila_ratio(1, 10) == 0.0

    def test_capacity(self):
        with pytest.raises(CapacityError):
            jutila_ratio(10**5, 10**5)


class TestFactorize:
    @given(st.integers(1, 10**9))
    def test_product(self, n):
        assert math.prod(p**k for p, k in factorize(n).items()) == n

    @given(st.integers(1, 5000))
    def test_phi(self, n):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
