import math

import numpy as np
import pytest

from besselneumann import (BesselNeumannError, element_tail_sum, expm_action_e1,
                           factorial_weights, geometric_weights, make_builtin,
                           ones_weights, remainder_action, remainder_scalar,
                           theorem1_bound, truncate)


class TestRemainderScalar:
    def test_full_series_is_exp(self):
        for z in (0.3, 1.0, 4.7):
            assert remainder_scalar(z, 0) == pytest.approx(math.exp(z), rel=1e-14)

    def test_e_minus_one(self):
        assert remainder_scalar(1.0, 1) == pytest.approx(math.e - 1.0, abs=1e-12)

    def test_e2_minus_five(self):
        assert remainder_scalar(2.0, 3) == pytest.approx(math.e ** 2 - 5.0, abs=1e-12)

    def test_z_zero(self):
        assert remainder_scalar(0.0, 0) == 1.0
        assert remainder_scalar(0.0, 7) == 0.0

    def test_monotone_in_n(self):
        for z in (0.5, 2.0, 20.0):
            prev = remainder_scalar(z, 0)
            for n in range(1, 60):
                cur = remainder_scalar(z, n)
                assert cur < prev
                prev = cur

    def test_no_cancellation_at_large_n(self):
        # e^z minus the partial sum would return garbage here; the tail sum
        # must stay positive and tiny
        v = remainder_scalar(1.0, 40)
        assert 0.0 < v < 1e-47

    def test_negative_z_rejected(self):
        with pytest.raises(BesselNeumannError):
            remainder_scalar(-1.0, 2)


class TestRemainderAction:
    def test_n_zero_is_expm_action(self):
        H = truncate(make_builtin("bessel"), 20)
        got = remainder_action(H, 1.0, 0)
        ref = expm_action_e1(H, 1.0)
        assert np.linalg.norm(got - ref) <= 1e-12

    def test_jordan_monomial_tail(self):
        H = truncate(make_builtin("jordan"), 6)
        got = remainder_action(H, 1.0, 2)
        expect = np.array([0, 0, 1 / 2, 1 / 6, 1 / 24, 1 / 120])
        assert np.max(np.abs(got - expect)) <= 1e-15

    def test_norm_bounded_by_scalar_remainder(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            N = int(rng.integers(8, 40))
            H = np.triu(rng.standard_normal((N, N)), -1)
            H /= max(1.0, np.linalg.norm(H, 2) / 2.0)
            s = rng.uniform(0.1, 2.0)
            z = s * np.linalg.norm(H, 2)
            for n in (0, 3, 10, 20):
                lhs = np.linalg.norm(remainder_action(H, s, n))
                assert lhs <= remainder_scalar(z, n) * (1 + 1e-12) + 1e-300


class TestTheorem1Bound:
    def test_all_ones_reduces_to_plain_remainder(self):
        op = make_builtin("bessel")
        H = truncate(op, 50)
        val = theorem1_bound(op, ones_weights(), 1.0, 4, 50)
        ref = np.linalg.norm(remainder_action(H, 1.0, 4))
        assert val == pytest.approx(ref, rel=1e-12)

    def test_s_zero(self):
        op = make_builtin("bessel")
        assert theorem1_bound(op, ones_weights(), 0.0, 3, 40) == 0.0

    def test_bessel_value_below_scalar_bound(self):
        val = theorem1_bound(make_builtin("bessel"), ones_weights(), 1.0, 10, 80)
        assert 0.0 < val <= remainder_scalar(2.0, 10)

    def test_geometric_scaling_direction(self):
        # r < 1 damps the Bessel subdiagonal (at the cost of the
        # superdiagonal) and shrinks the bound; r > 1 inflates it
        op = make_builtin("bessel")
        plain = theorem1_bound(op, ones_weights(), 1.0, 10, 80)
        shrunk = theorem1_bound(op, geometric_weights(0.5), 1.0, 10, 80)
        grown = theorem1_bound(op, geometric_weights(2.0), 1.0, 10, 80)
        assert 0.0 < shrunk < plain < grown

    def test_unconverged_truncation_warns(self):
        op = make_builtin("bessel")
        with pytest.warns(RuntimeWarning, match="not converged"):
            theorem1_bound(op, ones_weights(), 10.0, 2, 5)

    def test_N_smaller_than_n_rejected(self):
        with pytest.raises(BesselNeumannError):
            theorem1_bound(make_builtin("bessel"), ones_weights(), 1.0, 10, 5)


class TestElementTailSum:
    def test_empty_tail(self):
        op = make_builtin("bessel")
        assert element_tail_sum(op, None, 1.0, 30, 30) == 0.0
        assert element_tail_sum(op, None, 1.0, 31, 30) == 0.0

    def test_jordan_tail_is_scalar_remainder(self):
        # entries of exp(1 * Jordan) e_1 are 1/(j-1)!, so the tail for n = 5
        # is the scalar remainder R_5(1) up to the truncation at N = 30
        got = element_tail_sum(make_builtin("jordan"), None, 1.0, 5, 30)
        assert got == pytest.approx(remainder_scalar(1.0, 5), rel=1e-12)

    def test_bessel_tail_decreasing_in_n(self):
        op = make_builtin("bessel")
        vals = [element_tail_sum(op, None, 10.0, n, 120) for n in range(20, 40)]
        assert all(v > 0 for v in vals)
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_weighted_variant(self):
        op = make_builtin("bessel")
        plain = element_tail_sum(op, None, 1.0, 5, 60)
        via_ones = element_tail_sum(op, ones_weights(), 1.0, 5, 60)
        assert via_ones == pytest.approx(plain, rel=1e-13)


class TestWeightSequences:
    def test_shipped_families(self):
        assert ones_weights().values(4).tolist() == [1, 1, 1, 1]
        assert geometric_weights(0.5).values(3).tolist() == [1, 0.5, 0.25]
        assert factorial_weights().values(4).tolist() == [1, 1, 2, 6]

    def test_positivity_enforced(self):
        with pytest.raises(BesselNeumannError):
            geometric_weights(-1.0)
