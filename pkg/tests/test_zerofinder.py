"""Tests for L-values on the critical line, the Hardy function and the zero finder."""

import math

import mpmath as mp
import numpy as np
import pytest

from lowzeros.characters import build_characters
from lowzeros.errors import DomainError
from lowzeros.zerofinder import (_direct_sum, HardyEvaluator, count_band, find_zeros, gamma_stats,
                                 hardy_z, l_on_critical_line, main_term, root_number)


def _chi(q, order=None):
    prim = build_characters(q).primitive_characters()
    if order is not None:
        prim = [c for c in prim if c.order == order]
    return prim[0]


@pytest.fixture(scope="module")
def chi4():
    return _chi(4)


@pytest.fixture(scope="module")
def chi3():
    return _chi(3)


class TestLValues:
    def test_beta_half(self, chi4):
        # Dirichlet beta(1/2) by an independent accelerated alternating series
        with mp.workdps(30):
            ref = float(mp.nsum(lambda n: (-1) ** n / mp.sqrt(2 * n + 1), [0, mp.inf]))
        assert l_on_critical_line(chi4, 0.0).real == pytest.approx(ref, abs=1e-10)
        assert ref == pytest.approx(0.667692, abs=1e-6)

    def test_chi3_half(self, chi3):
        with mp.workdps(30):
            ref = float(mp.re(mp.dirichlet(0.5, [0, 1, -1])))
        assert abs(l_on_critical_line(chi3, 0.0) - ref) < 1e-10
        assert ref == pytest.approx(0.480867, abs=1e-6)

    @pytest.mark.parametrize("q,label", [(5, 1), (7, 2), (13, 5), (24, 3)])
    def test_matches_mpmath(self, q, label):
        table = build_characters(q)
        prim = table.primitive_characters()
        chi = prim[label % len(prim)]
        ts = np.array([0.3, 7.1, 25.0])
        vals = l_on_critical_line(chi, ts)
        with mp.workdps(25):
            coeffs = [complex(v) for v in chi.values]
            for t, v in zip(ts, vals):
                ref = complex(mp.dirichlet(mp.mpf(0.5) + 1j * t, coeffs))
                assert abs(v - ref) < 1e-9

    def test_conjugate_symmetry(self):
        chi = _chi(7, order=6)
        ts = np.linspace(-20, 20, 41)
        a = l_on_critical_line(chi, ts)
        b = l_on_critical_line(chi.conj(), -ts)
        np.testing.assert_allclose(a, np.conj(b), atol=1e-10)

    def test_root_number_unimodular(self):
        for q in (5, 7, 11, 15, 16, 21):
            for chi in build_characters(q).primitive_characters():
                assert abs(abs(root_number(chi)) - 1) < 1e-12

    def test_real_characters_have_root_number_one(self):
        for q in (3, 4, 5, 8, 12, 13, 24):
            for chi in build_characters(q).primitive_characters():
                if chi.real:
                    assert abs(root_number(chi) - 1) < 1e-12

    def test_rejects_imprimitive(self):
        table = build_characters(9)
        imprim = [c for c in table if not c.primitive and not c.principal][0]
        with pytest.raises(DomainError):
            HardyEvaluator(imprim)
        with pytest.raises(DomainError):
            HardyEvaluator(table.principal)


    def test_uniform_grid_recurrence(self):
        rng = np.random.default_rng(1)
        ln = np.log(np.arange(1, 800))
        c = rng.normal(size=ln.size) + 1j * rng.normal(size=ln.size)
        t = np.linspace(-60.0, 60.0, 501)
        exact = np.exp(-np.outer(0.5 + 1j * t, ln)) @ c
        np.testing.assert_allclose(_direct_sum(t, ln, c), exact, atol=1e-10)


class TestHardyZ:
    def test_real_on_line(self):
        chi = _chi(11, order=10)
        ev = HardyEvaluator(chi)
        zc = ev.z_complex(np.linspace(-30, 30, 121))
        assert np.max(np.abs(zc.imag)) < 1e-9

    def test_vanishes_at_first_zero(self, chi4, mpmath_zeros):
        ev = HardyEvaluator(chi4)
        assert abs(hardy_z(ev, mpmath_zeros["chi4"][0])) < 1e-9
        assert abs(hardy_z(ev, 6.0209)) < 1e-3


class TestFindZeros:
    """Zero locations against the mpmath fixture and zero-count consistency."""

    def test_chi4(self, chi4, mpmath_zeros):
        zeros = find_zeros(chi4, 30.0)
        pos = zeros.positive()
        assert pos[0] == pytest.approx(6.0210, abs=1e-3)
        ref = mpmath_zeros["chi4"]
        np.testing.assert_allclose(pos[: len(ref)], ref, atol=1e-10)

    def test_chi3(self, chi3, mpmath_zeros):
        zeros = find_zeros(chi3, 30.0)
        pos = zeros.positive()
        assert pos[0] == pytest.approx(8.0397, abs=1e-3)
        np.testing.assert_allclose(pos[: len(mpmath_zeros["chi3"])], mpmath_zeros["chi3"], atol=1e-10)

    def test_count_chi4(self, chi4):
        zeros = find_zeros(chi4, 30.0)
        band, applies = count_band(4, 30.0)
        assert applies
        assert abs(zeros.count(30.0) - main_term(4, 30.0, chi4.parity)) <= band

    def test_residuals_and_brackets(self):
        chi = _chi(19, order=18)
        ev = HardyEvaluator(chi)
        zeros = find_zeros(chi, 20.0, evaluator=ev)
        assert zeros.complete
        assert np.all(zeros.residuals < 1e-7)
        for g in zeros.ordinates:
            a, b = ev.z(np.array([g - 1e-6, g + 1e-6]), 20.0)
            assert a * b < 0

    def test_real_character_symmetric(self):
        zeros = find_zeros(_chi(8), 25.0)
        np.testing.assert_allclose(np.sort(-zeros.ordinates), zeros.ordinates, atol=1e-12)

    def test_conjugate_list(self):
        chi = _chi(7, order=6)
        z = find_zeros(chi, 20.0)
        zc = find_zeros(chi.conj(), 20.0)
        np.testing.assert_allclose(z.conjugate().ordinates, zc.ordinates, atol=1e-9)

    def test_csv(self, chi4, tmp_path):
        path = tmp_path / "z.csv"
        find_zeros(chi4, 15.0).to_csv(path)
        lines = path.read_text().splitlines()
        assert lines[0] == "q,char_index,gamma,refined_residual"
        assert len(lines) == 1 + 6

    def test_bad_height(self, chi4):
        with pytest.raises(DomainError):
            find_zeros(chi4, 0.0)


class TestGammaStats:
    def test_chi4(self, chi4):
        g1, g1n, nc, complete = gamma_stats(find_zeros(chi4, 10.0))
        assert g1 == g1n == pytest.approx(6.0210, abs=1e-3)
        assert nc == 0 and complete

    def test_chi3(self, chi3):
        assert gamma_stats(find_zeros(chi3, 10.0))[2] == 0

    def test_chowla_slice(self):
        # no real primitive character of small conductor vanishes at the central point
        for q in range(3, 301):
            for chi in build_characters(q).primitive_characters():
                if chi.real:
                    assert abs(l_on_critical_line(chi, 0.0)) > 1e-3
