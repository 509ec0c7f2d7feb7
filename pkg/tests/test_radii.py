import numpy as np
import pytest
from numpy.testing import assert_allclose

from eoradius.errors import ConfigError, ShapeError, UnsupportedError
from eoradius.radii import (
    OperatorTuple,
    RadiusConfig,
    euclidean_radius,
    euclidean_radius_ascent,
    euclidean_radius_lambda,
    euclidean_radius_oracle,
    numerical_radius,
    numerical_radius_oracle,
    sphere_gradient,
    sphere_objective,
    tuple_op_norm,
)

from conftest import ginibre, jordan, random_tuple

FAST = RadiusConfig(restarts=8, max_iters=200, tol=1e-9, seed=7)


class TestOperatorTuple:
    def test_validation(self):
        with pytest.raises(ShapeError):
            OperatorTuple([])
        with pytest.raises(ShapeError):
            OperatorTuple([np.eye(2), np.eye(3)])
        with pytest.raises(ShapeError):
            OperatorTuple([np.ones((2, 3))])

    def test_algebra(self, rng):
        a = random_tuple(rng, 2, 3)
        b = random_tuple(rng, 2, 3)
        assert_allclose((a + b).stack, a.stack + b.stack)
        assert_allclose((a @ b)[0], a[0] @ b[0])
        assert_allclose((a @ b)[1], a[1] @ b[1])
        assert_allclose((2j * a).stack, 2j * a.stack)
        assert_allclose(a.adjoint()[0], a[0].conj().T)
        assert_allclose(a.mat_power(3)[1], a[1] @ a[1] @ a[1])
        with pytest.raises(ShapeError):
            a + random_tuple(rng, 3, 3)

    def test_stack_read_only(self, rng):
        a = random_tuple(rng, 1, 2)
        with pytest.raises(ValueError):
            a.stack[0, 0, 0] = 1.0

    def test_constructors(self):
        z = OperatorTuple.zeros(2, 3)
        assert z.d == 2 and z.dim == 3 and not z.stack.any()
        i = OperatorTuple.identity(2, 3)
        assert_allclose(i[1], np.eye(3))


class TestNumericalRadius:
    def test_identity(self):
        assert numerical_radius(np.eye(4)).value == pytest.approx(1.0, abs=1e-9)

    def test_jordan2(self, J):
        est = numerical_radius(J)
        assert est.value == pytest.approx(0.5, abs=1e-6)
        assert est.certified_lower == est.value

    def test_jordan3(self):
        est = numerical_radius(jordan(3))
        assert est.value == pytest.approx(np.cos(np.pi / 4), abs=1e-6)

    def test_non_square_raises(self):
        with pytest.raises(ShapeError):
            numerical_radius(np.ones((2, 3)))

    def test_matches_oracle(self, rng):
        for _ in range(15):
            m = ginibre(rng, int(rng.integers(2, 6)))
            est = numerical_radius(m)
            assert est.value == pytest.approx(numerical_radius_oracle(m), abs=1e-5)

    def test_witness_attains_value(self, rng):
        m = ginibre(rng, 4)
        est = numerical_radius(m)
        attained = abs(np.vdot(est.witness, m @ est.witness))
        assert attained == pytest.approx(est.value, abs=1e-9)


class TestNumericalRadiusOracle:
    def test_scaled_jordan(self):
        assert numerical_radius_oracle(2 * jordan(2)) == pytest.approx(1.0, abs=1e-6)

    def test_hermitian(self):
        assert numerical_radius_oracle(np.diag([1.0, -1.0])) == pytest.approx(1.0, abs=1e-9)

    def test_normal(self):
        assert numerical_radius_oracle(np.diag([1.0, 1j])) == pytest.approx(1.0, abs=1e-7)

    def test_grid_too_small(self, J):
        with pytest.raises(ConfigError):
            numerical_radius_oracle(J, grid_points=100)


class TestTupleOpNorm:
    def test_identity_pair(self):
        assert tuple_op_norm(OperatorTuple.identity(2, 2)) == pytest.approx(np.sqrt(2))

    def test_jordan_pair(self, J):
        # J*J + JJ* = I
        assert tuple_op_norm(OperatorTuple([J, J.conj().T])) == pytest.approx(1.0)

    def test_pauli(self, pauli):
        assert tuple_op_norm(pauli) == pytest.approx(np.sqrt(3))


class TestEuclideanRadius:
    def test_identity_pair(self):
        est = euclidean_radius(OperatorTuple.identity(2, 2), FAST)
        assert est.value == pytest.approx(np.sqrt(2), abs=1e-9)

    def test_jordan_pair(self, J):
        est = euclidean_radius(OperatorTuple([J, J.conj().T]), FAST)
        assert est.value == pytest.approx(np.sqrt(2) / 2, abs=1e-6)

    def test_pauli(self, pauli):
        assert euclidean_radius(pauli, FAST).value == pytest.approx(1.0, abs=1e-6)

    def test_zero_tuple(self):
        assert euclidean_radius(OperatorTuple.zeros(2, 3), FAST).value == 0.0

    def test_invalid_cfg(self):
        with pytest.raises(ConfigError):
            RadiusConfig(restarts=0)
        with pytest.raises(ConfigError):
            RadiusConfig(tol=-1.0)

    def test_witness_gauge_and_value(self, rng):
        tup = random_tuple(rng, 2, 3)
        est = euclidean_radius(tup, FAST)
        first = next(c for c in est.witness if abs(c) > 1e-12)
        assert abs(first.imag) < 1e-12 and first.real >= 0
        assert np.linalg.norm(est.witness) == pytest.approx(1.0, abs=1e-12)
        assert np.sqrt(sphere_objective(tup, est.witness)) == pytest.approx(est.value, abs=1e-10)

    def test_deterministic(self, rng):
        tup = random_tuple(rng, 2, 4)
        a = euclidean_radius(tup, FAST)
        b = euclidean_radius(tup, FAST)
        assert a.value == b.value and a.iterations == b.iterations

    def test_d1_consistency(self, rng):
        # single-entry tuples must agree with the numerical radius
        for _ in range(200):
            m = ginibre(rng, int(rng.integers(2, 7)))
            we = euclidean_radius(OperatorTuple([m]), FAST).value
            w = numerical_radius(m).value
            assert we == pytest.approx(w, abs=1e-6)

    def test_sandwich(self, rng):
        for _ in range(30):
            tup = random_tuple(rng, int(rng.integers(1, 4)), int(rng.integers(2, 6)))
            lo = tuple_op_norm(tup) / (2 * np.sqrt(tup.d))
            hi = tuple_op_norm(tup)
            val = euclidean_radius(tup, FAST).value
            assert lo <= val + 1e-8
            assert val <= hi + 1e-8

    def test_homogeneity(self, rng):
        for _ in range(10):
            tup = random_tuple(rng, 2, 3)
            alpha = complex(rng.standard_normal(), rng.standard_normal())
            scaled = euclidean_radius(alpha * tup, FAST).value
            assert scaled == pytest.approx(abs(alpha) * euclidean_radius(tup, FAST).value, abs=1e-6)

    def test_triangle_inequality(self, rng):
        for _ in range(10):
            a = random_tuple(rng, 2, 3)
            b = random_tuple(rng, 2, 3)
            lhs = euclidean_radius(a + b, FAST).value
            assert lhs <= euclidean_radius(a, FAST).value + euclidean_radius(b, FAST).value + 1e-6

    def test_strategy_agreement(self, rng):
        for _ in range(40):
            tup = random_tuple(rng, int(rng.integers(1, 4)), int(rng.integers(2, 6)))
            pga = euclidean_radius_ascent(tup, FAST)
            lam = euclidean_radius_lambda(tup, FAST, extra_starts=[pga.witness])
            assert abs(pga.value - lam.value) <= 1e-5 * max(1.0, lam.value)

    def test_power_inequality(self, rng):
        for _ in range(10):
            tup = random_tuple(rng, int(rng.integers(1, 4)), int(rng.integers(2, 5)))
            base = euclidean_radius(tup, FAST).value
            for n in (2, 3):
                lhs = euclidean_radius(tup.mat_power(n), FAST).value
                assert lhs <= np.sqrt(tup.d) * base**n + 1e-6


class TestEuclideanRadiusOracle:
    def test_jordan(self, J):
        assert euclidean_radius_oracle(OperatorTuple([J])) == pytest.approx(0.5, abs=1e-4)

    def test_identity(self):
        assert euclidean_radius_oracle(OperatorTuple.identity(1, 2)) == pytest.approx(1.0, abs=1e-9)

    def test_jordan_pair(self, J):
        got = euclidean_radius_oracle(OperatorTuple([J, J.conj().T]))
        assert got == pytest.approx(np.sqrt(2) / 2, abs=1e-4)

    def test_wrong_dim(self):
        with pytest.raises(UnsupportedError):
            euclidean_radius_oracle(OperatorTuple.identity(1, 3))

    def test_density_too_small(self, J):
        with pytest.raises(ConfigError):
            euclidean_radius_oracle(OperatorTuple([J]), grid_density=10)

    def test_agreement_with_optimizer(self, rng):
        for _ in range(20):
            tup = random_tuple(rng, int(rng.integers(1, 4)), 2)
            a = euclidean_radius(tup, FAST).value
            b = euclidean_radius_oracle(tup, grid_density=500)
            assert abs(a - b) <= 5e-4


class TestGradient:
    def test_matches_central_differences(self, rng):
        h = 1e-5
        for _ in range(20):
            tup = random_tuple(rng, int(rng.integers(1, 4)), int(rng.integers(2, 5)))
            x = rng.standard_normal(tup.dim) + 1j * rng.standard_normal(tup.dim)
            x /= np.linalg.norm(x)
            g = sphere_gradient(tup, x)
            fd = np.zeros_like(g)
            for i in range(tup.dim):
                for unit in (1.0, 1j):
                    e = np.zeros(tup.dim, complex)
                    e[i] = unit * h
                    der = (sphere_objective(tup, x + e) - sphere_objective(tup, x - e)) / (2 * h)
                    fd[i] += der * unit
            assert_allclose(g, fd, rtol=1e-5, atol=1e-7)
