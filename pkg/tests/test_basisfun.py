import math

import numpy as np
import pytest

from besselneumann import (BesselNeumannError, basis_error_bound,
                           bessel_i_ref, bessel_j_ref, default_pad,
                           eval_basis, make_builtin)

EPS = np.finfo(float).eps


def all_builtins():
    return [make_builtin("jordan"), make_builtin("bessel"),
            make_builtin("modified_bessel"), make_builtin("shifted_bessel", 0.5)]


class TestEvalBasis:
    def test_jordan_monomials(self):
        got = eval_basis(make_builtin("jordan"), 3, 2.0, pad=0)
        assert np.allclose(got, [1, 2, 2], rtol=0, atol=1e-14)

    def test_bessel_j0(self):
        got = eval_basis(make_builtin("bessel"), 1, 1.0, pad=40)
        assert got[0] == pytest.approx(0.7651976865579666, abs=1e-12)

    def test_modified_bessel_i0(self):
        got = eval_basis(make_builtin("modified_bessel"), 1, 1.0, pad=40)
        assert got[0] == pytest.approx(1.2660658777520084, abs=1e-12)

    @pytest.mark.parametrize("op", all_builtins(), ids=lambda o: o.name)
    def test_t_zero_is_e1(self, op):
        got = eval_basis(op, 6, 0.0, pad=10)
        assert np.array_equal(got, [1, 0, 0, 0, 0, 0])

    def test_bad_arguments(self):
        with pytest.raises(BesselNeumannError):
            eval_basis(make_builtin("bessel"), 0, 1.0)
        with pytest.raises(BesselNeumannError):
            eval_basis(make_builtin("bessel"), 3, 1.0, pad=-1)


class TestErrorBound:
    def test_plug_in_value(self):
        # 2 * (1*2)^5 / 5! * e^2
        assert basis_error_bound(2.0, 1.0, 5) == pytest.approx(
            3.9408299194296803, rel=1e-14)

    def test_t_zero(self):
        assert basis_error_bound(2.0, 0.0, 3) == 0.0
        assert basis_error_bound(2.0, 0.0, 0) == 2.0

    def test_n_zero(self):
        t, C = 1.7, 2.0
        assert basis_error_bound(C, t, 0) == pytest.approx(
            2.0 * math.exp(t * C), rel=1e-14)

    def test_no_overflow_large_n(self):
        # (tC)^n and n! overflow separately around n = 180; the ratio must not
        v = basis_error_bound(2.0, 10.0, 250)
        assert 0.0 < v < 1e-150
        # far past the crossover the value underflows cleanly to zero
        assert basis_error_bound(2.0, 10.0, 400) == 0.0

    def test_default_pad_meets_tolerance(self):
        for t in (1.0, 10.0):
            for n in (1, 5, 20):
                p = default_pad(2.0, t, n)
                assert basis_error_bound(2.0, t, n + p) <= 1e-13


class TestOracles:
    def test_values_at_zero(self):
        assert bessel_j_ref(0, 0.0) == 1.0
        assert bessel_j_ref(3, 0.0) == 0.0
        assert bessel_i_ref(0, 0.0) == 1.0

    def test_i0_at_one(self):
        assert bessel_i_ref(0, 1.0) == pytest.approx(1.2660658777520084, abs=1e-15)

    def test_derivative_recurrence(self):
        # J_1'(t) = (J_0(t) - J_2(t)) / 2 under central differencing
        h = 1e-5
        for t in (0.5, 1.0, 3.0, 7.0):
            fd = (bessel_j_ref(1, t + h) - bessel_j_ref(1, t - h)) / (2 * h)
            rec = 0.5 * (bessel_j_ref(0, t) - bessel_j_ref(2, t))
            assert fd == pytest.approx(rec, abs=1e-6)

    def test_against_scipy(self):
        import scipy.special
        for ell in (0, 1, 2, 5, 13):
            for t in (0.1, 1.0, 4.0, 10.0):
                assert bessel_j_ref(ell, t) == pytest.approx(
                    scipy.special.jv(ell, t), rel=1e-11, abs=1e-13)
                assert bessel_i_ref(ell, t) == pytest.approx(
                    scipy.special.iv(ell, t), rel=1e-11, abs=1e-13)

    def test_negative_argument_parity(self):
        for ell in (0, 1, 2, 3):
            assert bessel_j_ref(ell, -2.5) == pytest.approx(
                (-1.0) ** ell * bessel_j_ref(ell, 2.5), rel=1e-13)

    def test_supported_box(self):
        with pytest.raises(BesselNeumannError):
            bessel_j_ref(0, 51.0)
        with pytest.raises(BesselNeumannError):
            bessel_j_ref(201, 1.0)
        with pytest.raises(BesselNeumannError):
            bessel_j_ref(-1, 1.0)


class TestTruncationBoundProperty:
    @pytest.mark.parametrize("op", all_builtins(), ids=lambda o: o.name)
    @pytest.mark.parametrize("t", [1.0, 10.0])
    def test_pad0_error_within_bound(self, op, t):
        # The pad-0 truncation error obeys 2(tC)^n e^{tC} / n!; a small
        # machine-precision allowance covers the roundoff floor of the two
        # matrix exponentials once the bound drops below it.
        floor = 64 * EPS * max(1.0, np.linalg.norm(eval_basis(op, 30, t, 60)))
        for n in range(5, 31):
            diff = np.linalg.norm(eval_basis(op, n, t, 0)
                                  - eval_basis(op, n, t, 60)[:n])
            bound = basis_error_bound(op.norm_bound_C, t, n)
            assert diff <= bound + floor

    @pytest.mark.parametrize("t", [1.0, 10.0])
    def test_bessel_matches_oracle(self, t):
        op = make_builtin("bessel")
        got = eval_basis(op, 10, t)
        ref = np.array([bessel_j_ref(l, t) for l in range(10)])
        assert np.max(np.abs(got - ref)) <= 1e-10

    @pytest.mark.parametrize("t", [1.0, 10.0])
    def test_modified_bessel_matches_oracle(self, t):
        op = make_builtin("modified_bessel")
        got = eval_basis(op, 10, t)
        ref = np.array([bessel_i_ref(l, t) for l in range(10)])
        assert np.max(np.abs(got - ref)) <= 1e-10
