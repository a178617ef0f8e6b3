import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose
from scipy import integrate

from zorder.errors import EmptyCommonSupport, InputError
from zorder.fuzzy import DEFAULT_LEVELS, FuzzyNumber, Interval
from zorder.orders import (
    LifetimeDistribution,
    OrderCheckConfig,
    aging_intensity_order,
    classical_orders,
    expectation_order,
    hazard_rate_order,
    integrated_dominance,
    integrated_transform,
    likelihood_ratio_order,
    monotonicity,
    mrl_order,
    relative_hazard_order,
    relative_mrl_order,
    reliability,
)

geo = LifetimeDistribution.geometric
pmfs = st.lists(st.floats(0.0, 1.0), min_size=1, max_size=15).filter(lambda w: sum(w) > 1e-3)


def crisp(weights):
    w = np.asarray(weights, dtype=float)
    return LifetimeDistribution.crisp(w / w.sum())


def fuzzify(dist, delta=0.02):
    numbers = [
        FuzzyNumber(DEFAULT_LEVELS, tuple(Interval(max(0.0, f - delta * (1 - a)), f + delta * (1 - a)) for a in DEFAULT_LEVELS))
        for f in dist.pmf
    ]
    return LifetimeDistribution.from_fuzzy(numbers)


def degenerate_fuzzy(dist):
    return LifetimeDistribution.from_fuzzy([FuzzyNumber.crisp(f) for f in dist.pmf])


def random_pair(rng):
    """Crisp pair drawn from a mix that regularly produces ordered pairs."""
    kind = rng.integers(4)
    if kind == 0:
        return geo(rng.uniform(0.1, 0.9), 60), geo(rng.uniform(0.1, 0.9), 60)
    if kind == 1:
        n = int(rng.integers(1, 10))
        return crisp(rng.uniform(size=n + 1)), crisp(rng.uniform(size=int(rng.integers(1, 10)) + 1))
    if kind == 2:
        # monotone likelihood ratio by construction
        n = int(rng.integers(2, 10))
        base = rng.uniform(0.1, 1.0, size=n)
        ratio = np.cumprod(rng.uniform(0.8, 1.6, size=n))
        return crisp(base), crisp(base * ratio)
    base = rng.uniform(size=int(rng.integers(2, 8)))
    return crisp(base), crisp(np.concatenate([[0.0] * int(rng.integers(0, 3)), base]))


def hazard_oracle(f):
    out = []
    for n in range(len(f)):
        s = sum(f[n:])
        out.append(f[n] / s if s > 1e-9 else math.nan)
    return np.array(out)


def mrl_oracle(f):
    out = []
    for n in range(len(f)):
        s = sum(f[n:])
        tail = sum(sum(f[k:]) for k in range(n + 1, len(f)))
        out.append(tail / s if s > 1e-9 else math.nan)
    return np.array(out)


class TestDistribution:
    def test_impulse_allowed(self):
        assert LifetimeDistribution.crisp([1.0]).n_max == 0

    @pytest.mark.parametrize("pmf", [[0.5, 0.6], [1.2, -0.2], [], [math.nan, 1.0]])
    def test_invalid_pmf(self, pmf):
        with pytest.raises(InputError):
            LifetimeDistribution.crisp(pmf)

    def test_geometric_truncation(self):
        d = geo(0.5)
        assert d.n_max == 200
        assert d.pmf.sum() == pytest.approx(1.0, abs=1e-15)
        assert_allclose(d.pmf, 0.5 ** (np.arange(201) + 1) / (1 - 0.5**201), rtol=1e-14)
        assert d.truncation_error == pytest.approx(0.5**201, abs=1e-30)

    def test_fuzzy_validation(self):
        with pytest.raises(InputError, match="negative"):
            LifetimeDistribution.from_fuzzy([FuzzyNumber.triangular(-0.1, 0.5, 0.6), FuzzyNumber.crisp(0.5)])
        with pytest.raises(InputError, match="sum"):
            LifetimeDistribution.from_fuzzy([FuzzyNumber.crisp(0.4), FuzzyNumber.crisp(0.4)])

    def test_point_masses(self):
        d = LifetimeDistribution.point_masses({2: 0.5, 5: 0.5})
        assert_allclose(d.pmf, [0, 0, 0.5, 0, 0, 0.5])


class TestReliability:
    def test_impulse(self):
        r = reliability(LifetimeDistribution.crisp([1.0]))
        assert_allclose(r.survival, [1.0, 0.0])
        assert r.hazard.tolist() == [1.0]
        assert r.mrl.tolist() == [0.0]

    def test_geometric_closed_forms(self):
        r = reliability(geo(0.5))
        finite = np.isfinite(r.hazard)
        assert finite.sum() >= 20
        assert np.max(np.abs(r.hazard[finite] - 0.5)) <= 1e-9
        m = r.mrl[np.isfinite(r.mrl)]
        assert np.max(np.abs(m - 1.0)) <= 1e-6

    def test_geometric_mrl_other_p(self):
        r = reliability(geo(0.3))
        m = r.mrl[:50]
        assert_allclose(m, 0.7 / 0.3, rtol=1e-9)

    @given(pmfs)
    def test_against_oracle_and_invariants(self, w):
        d = crisp(w)
        r = reliability(d)
        f = d.pmf
        assert r.survival[0] == pytest.approx(1.0)
        assert r.survival[-1] == 0.0
        assert np.all(np.diff(r.survival) <= 1e-15)
        assert_allclose(r.hazard, hazard_oracle(f), rtol=1e-9, atol=1e-12)
        assert_allclose(r.mrl, mrl_oracle(f), rtol=1e-9, atol=1e-12)
        h = r.hazard[np.isfinite(r.hazard)]
        assert np.all((h >= 0) & (h <= 1 + 1e-12))
        assert np.all(r.mrl[np.isfinite(r.mrl)] >= 0)
        if r.survival[d.n_max] > 1e-9:
            assert r.hazard[-1] == pytest.approx(1.0)
            assert r.mrl[-1] == 0.0

    def test_monotonicity_labels(self):
        assert monotonicity(np.array([0.5, 0.5, np.nan])) == "constant"
        assert monotonicity(np.array([0.1, 0.2, 0.2])) == "increasing"
        assert monotonicity(np.array([3.0, 1.0])) == "decreasing"
        assert monotonicity(np.array([1.0, 2.0, 1.0])) == "none"


class TestConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"z_grid": ()},
            {"z_grid": (1.0,)},
            {"z_grid": (math.inf,)},
            {"alpha_grid": ()},
            {"alpha_grid": (1.5,)},
            {"threshold": -1.0},
            {"tolerance": math.nan},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(InputError):
            OrderCheckConfig(**kwargs)

    def test_defaults(self):
        cfg = OrderCheckConfig()
        assert cfg.z_grid == (1.25, 1.5, 2.0, 4.0)
        assert [(p.alpha, p.beta) for p in cfg.pairs] == [(0, 0), (0, 0.5), (0, 1), (0.5, 0.5), (0.5, 1), (1, 1)]


class TestExpectation:
    def test_reflexive(self):
        v = expectation_order(geo(0.4), geo(0.4))
        assert v.holds == "yes"
        assert np.all(v.ratios() == 1.0)

    def test_geometric_pair_against_direct_sum(self):
        cfg = OrderCheckConfig(z_grid=(1.5, 2.0, 4.0))
        X, Y = geo(0.5), geo(0.3)
        v = expectation_order(X, Y, cfg)
        assert v.holds == "yes"
        for e in v.evidence:
            tx = sum(f * e.z ** -n for n, f in enumerate(X.pmf))
            ty = sum(f * e.z ** -n for n, f in enumerate(Y.pmf))
            assert e.min_ratio == pytest.approx(tx / ty, rel=1e-12)
            assert tx >= ty

    def test_point_masses(self):
        X = LifetimeDistribution.point_masses({2: 1.0})
        Y = LifetimeDistribution.point_masses({5: 1.0})
        v = expectation_order(X, Y, OrderCheckConfig(z_grid=(2.0,)))
        assert v.holds == "yes"
        assert v.evidence[0].min_ratio == pytest.approx(8.0, rel=1e-14)
        assert expectation_order(Y, X, OrderCheckConfig(z_grid=(2.0,))).holds == "no"

    def test_literal_threshold_zero_is_vacuous(self):
        cfg = OrderCheckConfig(threshold=0.0)
        assert expectation_order(geo(0.2), geo(0.8), cfg).holds == "yes"
        assert expectation_order(geo(0.2), geo(0.8)).holds == "no"


class TestHazard:
    def test_constant_ratio(self):
        v = hazard_rate_order(geo(0.5), geo(0.3))
        assert v.holds == "yes"
        assert_allclose(v.ratios(), 0.5 / 0.3, rtol=1e-9)

    def test_reversed_fails_at_first_point(self):
        v = hazard_rate_order(geo(0.3), geo(0.5))
        assert v.holds == "no"
        assert v.witness == v.evidence[0]
        assert_allclose(v.ratios(), 0.6, rtol=1e-9)

    def test_reflexive(self):
        d = crisp([0.2, 0.5, 0.3])
        assert np.all(hazard_rate_order(d, d).ratios() == 1.0)


class TestRelative:
    def test_identical_pairs(self):
        a, b = geo(0.3), crisp([0.1, 0.6, 0.3])
        v = relative_hazard_order(a, a, b, b)
        assert v.holds == "yes"
        assert np.all(v.ratios() == 1.0)

    def test_constant_hazard_pairs(self):
        v = relative_hazard_order(geo(0.5), geo(0.25), geo(0.4), geo(0.4))
        assert v.holds == "yes"
        assert_allclose(v.ratios(), 2.0, rtol=1e-9)
        w = relative_hazard_order(geo(0.4), geo(0.4), geo(0.5), geo(0.25))
        assert w.holds == "no"
        assert_allclose(w.ratios(), 0.5, rtol=1e-9)

    def test_mrl_pairs(self):
        v = relative_mrl_order(geo(0.3), geo(0.5), geo(0.4), geo(0.4))
        assert v.holds == "yes"
        assert_allclose(v.ratios(), 7 / 3, rtol=1e-6)
        assert relative_mrl_order(geo(0.4), geo(0.4), geo(0.3), geo(0.5)).holds == "no"

    def test_all_equal_mrl(self):
        d = crisp([0.3, 0.3, 0.4])
        assert np.all(relative_mrl_order(d, d, d, d).ratios() == 1.0)

    def test_empty_support(self):
        a = LifetimeDistribution.point_masses({0: 1.0})
        with pytest.raises(EmptyCommonSupport):
            relative_mrl_order(a, a, a, a)


class TestLikelihoodRatio:
    def test_reflexive(self):
        d = crisp([0.1, 0.2, 0.3, 0.4])
        assert np.all(likelihood_ratio_order(d, d).ratios() == 1.0)

    def test_geometric_against_brute_force(self):
        cfg = OrderCheckConfig(z_grid=(1.5, 2.0))
        X, Y = geo(0.5, 100), geo(0.3, 100)
        v = likelihood_ratio_order(X, Y, cfg)
        f, g = X.pmf, Y.pmf
        for e in v.evidence:
            num = sum(f[n] * g[n + 1] * e.z**-n for n in range(100))
            den = sum(g[n] * f[n + 1] * e.z**-n for n in range(100))
            assert abs(e.min_ratio - num / den) <= 1e-12
        # f_Y / f_X increases geometrically with ratio 0.7 / 0.5
        assert v.holds == "yes"
        assert_allclose(v.ratios(), 1.4, rtol=1e-12)
        assert likelihood_ratio_order(Y, X, cfg).holds == "no"

    def test_disjoint_support(self):
        X = LifetimeDistribution.point_masses({0: 0.5, 1: 0.5})
        Y = LifetimeDistribution.point_masses({3: 1.0})
        with pytest.raises(EmptyCommonSupport):
            likelihood_ratio_order(X, Y)


class TestMrl:
    def test_reflexive(self):
        assert np.all(mrl_order(geo(0.2), geo(0.2)).ratios() == 1.0)

    def test_closed_form(self):
        v = mrl_order(geo(0.3), geo(0.5))
        assert v.holds == "yes"
        assert_allclose(v.ratios(), 7 / 3, rtol=1e-6)
        w = mrl_order(geo(0.5), geo(0.3))
        assert w.holds == "no"
        assert_allclose(w.ratios(), 3 / 7, rtol=1e-6)


class TestAging:
    def test_equal_limits(self):
        X, Y = crisp([0.2, 0.3, 0.5]), crisp([0.6, 0.1, 0.3])
        v = aging_intensity_order(X, Y, x_limit=1, y_limit=1)
        assert np.all(v.ratios() == 1.0)

    def test_first_term_share(self):
        X, Y = crisp([0.2, 0.3, 0.5]), crisp([0.6, 0.1, 0.3])
        v = aging_intensity_order(X, Y, x_limit=0, y_limit=2)
        for e in v.evidence:
            terms = [X.pmf[n] * Y.pmf[n] * e.z**-n for n in range(3)]
            assert e.min_ratio == pytest.approx(terms[0] / sum(terms), rel=1e-14)
            assert e.min_ratio <= 1.0
        assert v.holds == "no"

    def test_all_mass_at_zero(self):
        d = LifetimeDistribution.crisp([1.0, 0.0, 0.0])
        for k in range(3):
            assert np.all(aging_intensity_order(d, d, x_limit=k, y_limit=2).ratios() == 1.0)

    def test_zero_prefix_is_indeterminate(self):
        d = LifetimeDistribution.point_masses({3: 1.0})
        v = aging_intensity_order(d, d, x_limit=1, y_limit=2)
        assert v.holds == "indeterminate"

    @pytest.mark.parametrize("xl, yl", [(2, 1), (-1, 0), (0, 9)])
    def test_invalid_limits(self, xl, yl):
        with pytest.raises(InputError):
            aging_intensity_order(crisp([1, 1, 1]), crisp([1, 1, 1, 1]), x_limit=xl, y_limit=yl)


class TestIntegrated:
    def test_closed_forms(self):
        assert integrated_transform(LifetimeDistribution.crisp([1.0]), 2, 3) == pytest.approx(1.0, abs=1e-12)
        one = LifetimeDistribution.point_masses({1: 1.0})
        assert abs(integrated_transform(one, 2, 4) - math.log(2)) <= 1e-9
        two = LifetimeDistribution.point_masses({2: 1.0})
        assert abs(integrated_transform(two, 2, 4) - 0.25) <= 1e-10

    def test_against_scipy_quad(self):
        d = geo(0.4)
        want, _ = integrate.quad(lambda z: sum(f * z**-n for n, f in enumerate(d.pmf)), 1.2, 5.0, epsabs=1e-13)
        assert abs(integrated_transform(d, 1.2, 5.0) - want) <= 1e-10

    @settings(max_examples=30)
    @given(st.floats(1.05, 3.0), st.floats(0.01, 2.0), st.floats(0.0, 2.0))
    def test_monotone_in_interval(self, lo, width, extra):
        d = geo(0.3)
        inner = integrated_transform(d, lo, lo + width)
        outer = integrated_transform(d, lo, lo + width + extra + 1e-3)
        assert outer >= inner

    @pytest.mark.parametrize("lo, hi", [(1.0, 2.0), (3.0, 2.0), (0.5, 2.0)])
    def test_invalid_interval(self, lo, hi):
        with pytest.raises(InputError):
            integrated_transform(geo(0.5), lo, hi)

    def test_dominance(self):
        assert integrated_dominance(geo(0.5), geo(0.5), 1.5, 3).holds == "yes"
        assert integrated_dominance(geo(0.5), geo(0.3), 1.5, 3).holds == "yes"
        assert integrated_dominance(geo(0.3), geo(0.5), 1.5, 3).holds == "no"


class TestClassical:
    def test_reflexive(self):
        d = crisp([0.2, 0.3, 0.5])
        rep = classical_orders(d, d)
        assert rep.to_dict() == {"st": "equal", "hr": "equal", "lr": "equal"}

    def test_geometric(self):
        rep = classical_orders(geo(0.5, 100), geo(0.3, 100))
        assert rep.to_dict() == {"st": "x_smaller", "hr": "x_smaller", "lr": "x_smaller"}

    def test_crossing_survival(self):
        bimodal = crisp([0.45, 0.0, 0.0, 0.0, 0.55])
        unimodal = crisp([0.0, 0.2, 0.6, 0.2, 0.0])
        assert classical_orders(bimodal, unimodal).st.state == "indeterminate"

    def test_chain_and_transform_consistency(self):
        rng = np.random.default_rng(500)
        cfg = OrderCheckConfig()
        counts = {"lr": 0, "hr": 0, "st": 0}
        for _ in range(500):
            X, Y = random_pair(rng)
            rep = classical_orders(X, Y)
            for a, b in ((X, Y), (Y, X)):
                r = classical_orders(a, b)
                if r.lr.x_le_y:
                    counts["lr"] += 1
                    assert r.hr.x_le_y
                if r.hr.x_le_y:
                    counts["hr"] += 1
                    assert r.st.x_le_y
                if r.st.x_le_y:
                    counts["st"] += 1
                    assert expectation_order(a, b, cfg).holds == "yes"
            assert rep.st.x_le_y == classical_orders(Y, X).st.y_le_x
        assert min(counts.values()) >= 100


class TestVerdictConsistency:
    def test_geometric_orders_match_classical_and_flip(self):
        X, Y = geo(0.5), geo(0.3)
        rep = classical_orders(X, Y)
        assert rep.st.state == rep.hr.state == rep.lr.state == "x_smaller"
        forward = {
            "expectation": expectation_order(X, Y).holds,
            "hazard": hazard_rate_order(X, Y).holds,
            "likelihood-ratio": likelihood_ratio_order(X, Y).holds,
            "mrl": mrl_order(X, Y).holds,
        }
        # X is smaller: earlier mass, higher hazard, shorter residual life
        assert forward == {"expectation": "yes", "hazard": "yes", "likelihood-ratio": "yes", "mrl": "no"}
        backward = {
            "expectation": expectation_order(Y, X).holds,
            "hazard": hazard_rate_order(Y, X).holds,
            "likelihood-ratio": likelihood_ratio_order(Y, X).holds,
            "mrl": mrl_order(Y, X).holds,
        }
        assert all(forward[k] != backward[k] for k in forward)

    def test_fuzzy_collapse(self):
        rng = np.random.default_rng(12)
        comparators = (expectation_order, hazard_rate_order, likelihood_ratio_order, mrl_order)
        for _ in range(20):
            X, Y = random_pair(rng)
            FX, FY = degenerate_fuzzy(X), degenerate_fuzzy(Y)
            for comp in comparators:
                try:
                    a = comp(X, Y)
                except EmptyCommonSupport:
                    continue
                b = comp(FX, FY)
                assert a.holds == b.holds
                assert_allclose(a.ratios(), b.ratios(), rtol=0, atol=0)
                assert np.array_equal(a.ratios()[:, 0], a.ratios()[:, 1], equal_nan=True)

    def test_reflexivity_everywhere(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            base = crisp(rng.uniform(size=int(rng.integers(2, 9))))
            for d in (base, fuzzify(base)):
                for comp in (expectation_order, hazard_rate_order, likelihood_ratio_order, mrl_order):
                    assert np.all(comp(d, d).ratios() == 1.0)
                for comp in (relative_hazard_order, relative_mrl_order):
                    other = geo(0.4, 20)
                    assert np.all(comp(d, other, d, other).ratios() == 1.0)
                assert np.all(aging_intensity_order(d, d, x_limit=d.n_max, y_limit=d.n_max).ratios() == 1.0)

    def test_fuzzy_min_max_branches(self):
        X, Y = fuzzify(geo(0.5, 30), 0.01), fuzzify(geo(0.3, 30), 0.01)
        v = expectation_order(X, Y)
        lo_x, hi_x = X.endpoint_sequences(OrderCheckConfig().pairs, 31)
        lo_y, hi_y = Y.endpoint_sequences(OrderCheckConfig().pairs, 31)
        for e in v.evidence:
            w = e.z ** -np.arange(31)
            assert e.min_terms == pytest.approx(((lo_x @ w).min(), (lo_y @ w).min()), rel=1e-12)
            assert e.max_terms == pytest.approx(((hi_x @ w).max(), (hi_y @ w).max()), rel=1e-12)
            assert e.min_ratio != e.max_ratio

    def test_verdict_dict(self):
        d = hazard_rate_order(geo(0.3), geo(0.5)).to_dict()
        assert d["holds"] == "no"
        assert d["witness"] == d["evidence"][0]
        assert set(d["evidence"][0]) == {"z", "alpha", "beta", "min_ratio", "max_ratio", "min_terms", "max_terms"}
