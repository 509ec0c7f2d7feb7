import numpy as np
import pytest
from numpy.testing import assert_allclose

from eoradius import bounds
from eoradius.errors import DomainError, PreconditionError
from eoradius.matfun import power_pair, sqrt_pair
from eoradius.radii import OperatorTuple, RadiusConfig, euclidean_radius

from conftest import ginibre, jordan, random_tuple

FAST = RadiusConfig(restarts=4, max_iters=200, tol=1e-9, seed=11)


def tup(*mats):
    return OperatorTuple([np.asarray(m, dtype=complex) for m in mats])


def positive_block(rng, d, n, scale=1.0):
    a, b, c = [], [], []
    for _ in range(d):
        x = ginibre(rng, n, scale)
        y = ginibre(rng, n, scale)
        a.append(x @ x.conj().T)
        b.append(y.conj().T @ y)
        c.append(y.conj().T @ x.conj().T)
    return OperatorTuple(a), OperatorTuple(b), OperatorTuple(c)


class TestSandwich:
    def test_identity(self):
        assert bounds.sandwich(OperatorTuple.identity(1, 2)) == (0.5, 1.0)

    def test_pauli(self, pauli):
        lo, hi = bounds.sandwich(pauli)
        assert lo == pytest.approx(0.5)
        assert hi == pytest.approx(np.sqrt(3))

    def test_zero(self):
        assert bounds.sandwich(OperatorTuple.zeros(3, 2)) == (0.0, 0.0)


class TestBlockDominance:
    def test_identity_equality(self):
        i = OperatorTuple.identity(1, 2)
        reports = bounds.block_dominance_bounds(i, i, i, FAST)
        for rep in reports:
            assert rep.value == pytest.approx(1.0, abs=1e-9)

    def test_scaling(self):
        two = 2 * OperatorTuple.identity(1, 2)
        reports = bounds.block_dominance_bounds(two, two, two, FAST)
        assert reports[0].value == pytest.approx(2.0, abs=1e-9)

    def test_jordan_product_instance(self, J):
        a = tup(J @ J.conj().T)
        b = tup(J.conj().T @ J)
        c = tup((J @ J).conj().T @ J.conj().T)  # zero here
        reports = bounds.block_dominance_bounds(a, b, c, FAST)
        assert reports[0].value == pytest.approx(1 / np.sqrt(2), abs=1e-9)

    def test_rejects_non_positive(self, rng):
        bad = tup(np.diag([1.0, -1.0]))
        good = tup(np.eye(2))
        with pytest.raises(PreconditionError, match="k=0"):
            bounds.block_dominance_bounds(bad, good, good, FAST)

    def test_rejects_non_positive_block(self):
        i = OperatorTuple.identity(1, 2)
        big_c = 5 * OperatorTuple.identity(1, 2)
        with pytest.raises(PreconditionError, match="block"):
            bounds.block_dominance_bounds(i, i, big_c, FAST)

    def test_soundness_random(self, rng):
        for _ in range(15):
            a, b, c = positive_block(rng, int(rng.integers(1, 4)), int(rng.integers(2, 5)))
            lhs = euclidean_radius(c, FAST).value
            for rep in bounds.block_dominance_bounds(a, b, c, FAST):
                assert lhs <= rep.value + 1e-8 * max(1, rep.value)


class TestProductBounds:
    def test_identity_equality(self):
        i = OperatorTuple.identity(1, 2)
        for rep in bounds.product_bounds(i, i, FAST):
            assert rep.value == pytest.approx(1.0, abs=1e-9)

    def test_jordan(self, J):
        reports = bounds.product_bounds(tup(J), tup(J), FAST)
        assert reports[0].value == pytest.approx(1 / np.sqrt(2), abs=1e-12)

    def test_scalar_arithmetic(self):
        reports = bounds.product_bounds(tup(2 * np.eye(2)), tup(3 * np.eye(2)), FAST)
        assert reports[0].value == pytest.approx(np.sqrt(48.5), abs=1e-12)
        assert reports[0].value >= 6.0

    def test_soundness_random(self, rng):
        for _ in range(15):
            d, n = int(rng.integers(1, 4)), int(rng.integers(2, 5))
            b, c = random_tuple(rng, d, n), random_tuple(rng, d, n)
            lhs = euclidean_radius(b @ c, FAST).value
            for rep in bounds.product_bounds(b, c, FAST):
                assert lhs <= rep.value + 1e-8 * max(1, rep.value)


class TestPolarPowerBounds:
    def test_jordan_half(self, J):
        th2, th3, th4 = bounds.polar_power_bounds(tup(J), 0.5, FAST)
        assert th2.value == pytest.approx(1 / np.sqrt(2), abs=1e-12)
        assert th4.value == pytest.approx(0.5, abs=1e-9)

    def test_identity_tuple_equality(self):
        for d in (1, 3):
            th2 = bounds.polar_power_bounds(OperatorTuple.identity(d, 2), 0.5, FAST)[0]
            assert th2.value == pytest.approx(np.sqrt(d), abs=1e-12)

    def test_endpoint_convention(self, J):
        # t = 1 uses |J*|^0 = I even though J is singular
        th2 = bounds.polar_power_bounds(tup(J), 1.0, FAST)[0]
        assert th2.value == pytest.approx(1.0, abs=1e-12)

    def test_t_out_of_range(self, J):
        with pytest.raises(DomainError):
            bounds.polar_power_bounds(tup(J), 1.5, FAST)

    def test_soundness_and_wins(self, rng):
        for _ in range(15):
            a = random_tuple(rng, int(rng.integers(1, 4)), int(rng.integers(2, 5)))
            t = float(rng.random())
            lhs = euclidean_radius(a, FAST).value
            for rep in bounds.polar_power_bounds(a, t, FAST):
                assert lhs <= rep.value + 1e-8 * max(1, rep.value)


class TestCommutingFgBound:
    def test_jordan_instance(self, J):
        b = tup(J)
        c = tup(np.diag([0.0, 1.0]))
        r1, r2 = bounds.commuting_fg_bound(b, c, sqrt_pair(), FAST)
        assert r1.value == pytest.approx(1 / np.sqrt(2), abs=1e-9)
        assert r2.value == pytest.approx(1 / np.sqrt(2), abs=1e-12)

    def test_identity_equality(self):
        i = OperatorTuple.identity(1, 2)
        r1, r2 = bounds.commuting_fg_bound(i, i, sqrt_pair(), FAST)
        assert r1.value == pytest.approx(1.0, abs=1e-9)
        assert r2.value == pytest.approx(1.0, abs=1e-12)

    def test_zero_b(self, rng):
        z = OperatorTuple.zeros(1, 2)
        h = tup(np.diag([1.0, 2.0]))
        r1, r2 = bounds.commuting_fg_bound(z, h, sqrt_pair(), FAST)
        assert r1.value == pytest.approx(0.0, abs=1e-12)
        assert r2.value == pytest.approx(0.0, abs=1e-12)

    def test_rejects_non_commuting(self, rng):
        b = tup(np.diag([1.0, 2.0]))
        c = tup(np.array([[0, 1], [0, 0]]))
        with pytest.raises(PreconditionError, match="residual"):
            bounds.commuting_fg_bound(b, c, sqrt_pair(), FAST)

    def test_chain_order(self, rng):
        for _ in range(10):
            d, n = int(rng.integers(1, 3)), int(rng.integers(2, 5))
            bs, cs = [], []
            for _ in range(d):
                g = ginibre(rng, n)
                coeff = rng.uniform(-1, 1, 4)
                from eoradius.matfun import abs_fn
                bs.append(g)
                cs.append(abs_fn(g, lambda s: coeff[0] + coeff[1]*s + coeff[2]*s**2 + coeff[3]*s**3))
            r1, r2 = bounds.commuting_fg_bound(
                OperatorTuple(bs), OperatorTuple(cs), power_pair(float(rng.random())), FAST
            )
            assert r1.value <= r2.value + 1e-9 * max(1, r2.value)


class TestFgPolarAndRemark:
    def test_jordan_abstract(self, J):
        reports = bounds.remark_bound(tup(J), 0.5, 0.5, FAST)
        assert reports[2].value == pytest.approx(1 / np.sqrt(2), abs=1e-12)

    def test_identity_all_params(self):
        i = OperatorTuple.identity(1, 3)
        for alpha in (0.0, 0.5, 1.0):
            for t in (0.0, 0.5, 1.0):
                for rep in bounds.remark_bound(i, alpha, t, FAST):
                    assert rep.value == pytest.approx(1.0, abs=1e-9)

    def test_scaled_jordan(self, J):
        rep = bounds.remark_bound(tup(2 * J), 0.5, 0.5, FAST)[2]
        assert rep.value == pytest.approx(np.sqrt(2), abs=1e-12)

    def test_specialization_consistency(self, rng):
        # the generic fg chain at f = g = sqrt, t = 1/2 must reproduce the
        # fully specialised closed form exactly
        for _ in range(5):
            a = random_tuple(rng, int(rng.integers(1, 4)), 3)
            via_fg = bounds.fg_polar_bounds(a, 0.5, sqrt_pair(), FAST)
            via_remark = bounds.remark_bound(a, 0.5, 0.5, FAST)
            for x, y in zip(via_fg, via_remark):
                assert abs(x.value - y.value) <= 1e-12 * max(1.0, y.value)
            assert via_remark[2].value == pytest.approx(
                bounds.abstract_bound(a, FAST).value, abs=1e-12
            )

    def test_chain_order(self, rng):
        for _ in range(10):
            a = random_tuple(rng, 2, 4)
            reports = bounds.fg_polar_bounds(a, float(rng.random()), power_pair(float(rng.random())), FAST)
            assert reports[0].value <= reports[1].value + 1e-9 * max(1, reports[1].value)
            assert reports[1].value <= reports[2].value + 1e-9 * max(1, reports[2].value)

    def test_param_errors(self, J):
        with pytest.raises(DomainError):
            bounds.remark_bound(tup(J), 1.5, 0.5, FAST)
        with pytest.raises(DomainError):
            bounds.remark_bound(tup(J), 0.5, -0.1, FAST)


class TestImaginaryCombos:
    def test_th7_identity(self):
        i = OperatorTuple.identity(1, 2)
        assert bounds.imaginary_combo_product_bound(i, i, FAST).value == pytest.approx(1.0, abs=1e-9)

    def test_th7_jordan(self, J):
        rep = bounds.imaginary_combo_product_bound(tup(J), tup(J), FAST)
        assert rep.value == pytest.approx(1 / np.sqrt(2), abs=1e-9)

    def test_th7_zero_left(self, rng):
        z = OperatorTuple.zeros(1, 3)
        c = random_tuple(rng, 1, 3)
        rep = bounds.imaginary_combo_product_bound(z, c, FAST)
        assert rep.value >= 0.0

    def test_th8_jordan(self, J):
        r1, r2 = bounds.imaginary_combo_bound(tup(J), 0.5, FAST)
        assert r1.value == pytest.approx(1 / np.sqrt(2), abs=1e-9)
        assert r2.value == pytest.approx(1 / np.sqrt(2), abs=1e-12)

    def test_th8_identity(self):
        for rep in bounds.imaginary_combo_bound(OperatorTuple.identity(1, 2), 0.3, FAST):
            assert rep.value == pytest.approx(1.0, abs=1e-9)


class TestQuarterBounds:
    def test_th15_identity(self):
        i = OperatorTuple.identity(1, 2)
        assert bounds.product_quarter_bound(i, i, FAST).value == pytest.approx(1.0, abs=1e-9)

    def test_th15_jordan(self, J):
        rep = bounds.product_quarter_bound(tup(J), tup(J), FAST)
        assert rep.value == pytest.approx(0.25, abs=1e-9)

    def test_th15_identity_pairs(self):
        i2 = OperatorTuple.identity(2, 2)
        rep = bounds.product_quarter_bound(i2, i2, FAST)
        assert rep.value == pytest.approx(2 * np.sqrt(2), abs=1e-9)

    def test_theo1_values(self, J):
        assert bounds.quarter_polar_bound(OperatorTuple.identity(1, 2), 0.5, FAST).value == pytest.approx(1.0, abs=1e-9)
        assert bounds.quarter_polar_bound(tup(J), 0.5, FAST).value == pytest.approx(0.5, abs=1e-9)
        assert bounds.quarter_polar_bound(2 * OperatorTuple.identity(1, 2), 0.5, FAST).value == pytest.approx(2.0, abs=1e-9)


class TestReports:
    def test_self_consistency_everywhere(self, rng):
        a = random_tuple(rng, 2, 3)
        b = random_tuple(rng, 2, 3)
        pa, pb, pc = positive_block(rng, 2, 3)
        reports = []
        reports += bounds.block_dominance_bounds(pa, pb, pc, FAST)
        reports += bounds.product_bounds(a, b, FAST)
        reports += bounds.polar_power_bounds(a, 0.3, FAST)
        reports += bounds.imaginary_combo_bound(a, 0.7, FAST)
        reports += bounds.fg_polar_bounds(a, 0.4, power_pair(0.6), FAST)
        reports += bounds.remark_bound(a, 0.2, 0.8, FAST)
        reports.append(bounds.imaginary_combo_product_bound(a, b, FAST))
        reports.append(bounds.product_quarter_bound(a, b, FAST))
        reports.append(bounds.quarter_polar_bound(a, 0.9, FAST))
        for rep in reports:
            assert bounds.recompute_value(rep) == pytest.approx(rep.value, abs=1e-12)
            assert np.isfinite(rep.value) and rep.value >= 0
            assert all(np.isfinite(v) for v in rep.components.values())
            assert rep.formula

    def test_component_scaling_laws(self, rng):
        # components follow their explicit power laws under A -> alpha A
        from eoradius.matfun import abs_pow, op_norm
        a = random_tuple(rng, 2, 3)
        alpha = 1.7
        t = 0.3
        base = bounds.polar_power_bounds(a, t, FAST)
        scaled = bounds.polar_power_bounds(alpha * a, t, FAST)
        c0, c1 = base[1].components, scaled[1].components
        assert c1["norm_adj_powers"] == pytest.approx(alpha ** (4 * (1 - t)) * c0["norm_adj_powers"], rel=1e-10)
        assert c1["norm_abs_powers"] == pytest.approx(alpha ** (4 * t) * c0["norm_abs_powers"], rel=1e-10)
        assert c1["we_product"] == pytest.approx(alpha**2 * c0["we_product"], rel=1e-6)
        for m in a:
            assert_allclose(abs_pow(alpha * m, 4 * t), alpha ** (4 * t) * abs_pow(m, 4 * t), atol=1e-10 * op_norm(m) ** (4 * t) * alpha ** (4 * t))

    def test_degree_one_bounds_scale_linearly(self, rng):
        a = random_tuple(rng, 2, 3)
        b = random_tuple(rng, 2, 3)
        alpha = 2.5
        pairs = [
            (bounds.product_quarter_bound(a, b, FAST).value,
             bounds.product_quarter_bound(np.sqrt(alpha) * a, np.sqrt(alpha) * b, FAST).value),
            (bounds.quarter_polar_bound(a, 0.5, FAST).value,
             bounds.quarter_polar_bound(alpha * a, 0.5, FAST).value),
        ]
        for unscaled, scaled in pairs:
            assert scaled == pytest.approx(alpha * unscaled, rel=2e-6)
