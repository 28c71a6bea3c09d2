import math

import numpy as np
import pytest

from besselneumann import (NumericalError, expm, expm_action_e1, make_builtin,
                           truncate)


def random_hessenberg(rng, n, norm1_max=4.0):
    A = np.triu(rng.standard_normal((n, n)), -1)
    norm = np.linalg.norm(A, 1)
    if norm > 0:
        A *= rng.uniform(0.05, norm1_max) / norm
    return A


class TestExpm:
    def test_zero_matrix(self):
        assert np.array_equal(expm(np.zeros((3, 3))), np.eye(3))

    def test_nilpotent(self):
        A = np.array([[0.0, 0.0], [1.0, 0.0]])
        assert np.allclose(expm(A), [[1, 0], [1, 1]], rtol=0, atol=1e-15)

    def test_closed_form_2x2(self):
        # A^2 = -I/2 so exp(A) = cos(1/sqrt2) I + sqrt2 sin(1/sqrt2) A
        A = np.array([[0.0, -1.0], [0.5, 0.0]])
        E = expm(A)
        c = math.cos(1 / math.sqrt(2))
        r2s = math.sqrt(2) * math.sin(1 / math.sqrt(2))
        expect = c * np.eye(2) + r2s * A
        assert np.allclose(E, expect, rtol=0, atol=1e-15)
        assert E[0, 0] == pytest.approx(0.7602445970756302, abs=1e-14)
        assert E[1, 0] == pytest.approx(0.4593626849327842, abs=1e-14)

    def test_against_scipy(self):
        import scipy.linalg
        rng = np.random.default_rng(7)
        for _ in range(20):
            A = rng.standard_normal((12, 12)) * rng.uniform(0.1, 3.0)
            got = expm(A)
            ref = scipy.linalg.expm(A)
            assert np.allclose(got, ref, rtol=1e-12, atol=1e-13 * np.linalg.norm(ref))

    def test_non_square_rejected(self):
        with pytest.raises(NumericalError):
            expm(np.zeros((2, 3)))

    def test_non_finite_rejected(self):
        with pytest.raises(NumericalError):
            expm(np.array([[np.nan, 0.0], [0.0, 0.0]]))

    def test_overflow_detected(self):
        with pytest.raises(NumericalError):
            expm(np.array([[2000.0]]))

    def test_inverse_relation(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            n = int(rng.integers(2, 51))
            A = random_hessenberg(rng, n)
            err = np.linalg.norm(expm(A) @ expm(-A) - np.eye(n), 1)
            assert err <= 1e-12


class TestActionE1:
    def test_jordan_monomials(self):
        H = truncate(make_builtin("jordan"), 4)
        got = expm_action_e1(H, 2.0)
        assert np.allclose(got, [1, 2, 2, 4 / 3], rtol=0, atol=1e-14)

    def test_t_zero_is_e1(self):
        H = truncate(make_builtin("bessel"), 7)
        assert np.array_equal(expm_action_e1(H, 0.0), np.eye(7)[0])

    def test_bessel_2x2_closed_form(self):
        H = truncate(make_builtin("bessel"), 2)
        got = expm_action_e1(H, 1.0)
        expect = [math.cos(1 / math.sqrt(2)),
                  math.sqrt(2) / 2 * math.sin(1 / math.sqrt(2))]
        assert np.allclose(got, expect, rtol=0, atol=1e-15)

    def test_jordan_exact_to_1e13(self):
        for n in (5, 15, 30):
            H = truncate(make_builtin("jordan"), n)
            for t in (-10.0, -1.0, 0.5, 3.0, 10.0):
                expect = np.array([t ** l / math.factorial(l) for l in range(n)])
                got = expm_action_e1(H, t)
                assert np.max(np.abs(got - expect)) <= 1e-13 * max(
                    1.0, np.max(np.abs(expect)))

    def test_semigroup(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(2, 25))
            A = random_hessenberg(rng, n, norm1_max=2.0)
            t, u = rng.uniform(-1.5, 1.5, size=2)
            lhs = expm_action_e1(A, t + u)
            rhs = expm(t * A) @ expm_action_e1(A, u)
            assert np.linalg.norm(lhs - rhs) <= 1e-11
