import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from zorder.errors import InvalidFamilyParameters, PreconditionError, UnknownItem
from zorder.io import dumps
from zorder.orders import LifetimeDistribution, OrderCheckConfig, hazard_rate_order
from zorder.theorems import (
    ITEMS,
    DistributionSpec,
    check_item,
    draw_pair,
    generate,
    item_table,
    proof_inequality_check,
    replay,
)

geo = LifetimeDistribution.geometric


class TestGenerators:
    def test_geometric(self):
        d = generate(DistributionSpec("geometric", (0.5,), seed=99))
        n = np.arange(201)
        want = 0.5 ** (n + 1)
        assert_allclose(d.pmf, want / want.sum(), rtol=1e-14)

    def test_two_point(self):
        d = generate(DistributionSpec("two-point", (2, 0.5, 5, 0.5)))
        assert d.pmf.tolist() == [0, 0, 0.5, 0, 0, 0.5]

    @pytest.mark.parametrize(
        "spec",
        [
            DistributionSpec("truncated-random", (7,), seed=3),
            DistributionSpec("fuzzy-perturbed", (5, 0.03), seed=4),
        ],
    )
    def test_deterministic(self, spec):
        a, b = generate(spec), generate(spec)
        assert np.array_equal(a.pmf, b.pmf)
        assert a.to_dict() == b.to_dict()

    def test_fuzzy_perturbed_shape(self):
        d = generate(DistributionSpec("fuzzy-perturbed", (4, 0.05), seed=1))
        assert d.is_fuzzy
        for f, fn in zip(d.pmf, d.fuzzy):
            assert fn.core.lo == fn.core.hi == f
            assert fn.cuts[0].hi == pytest.approx(f + 0.05)
            assert fn.cuts[0].lo == max(0.0, f - 0.05)

    @pytest.mark.parametrize(
        "family, params",
        [
            ("geometric", (1.0,)),
            ("geometric", (0.2, 0.3)),
            ("truncated-random", (2.5,)),
            ("two-point", (1, 0.5, 1, 0.5)),
            ("two-point", (1, 0.5, 2, 0.6)),
            ("fuzzy-perturbed", (3, -0.1)),
            ("poisson", (1.0,)),
        ],
    )
    def test_invalid(self, family, params):
        with pytest.raises(InvalidFamilyParameters):
            generate(DistributionSpec(family, params))

    def test_draw_pair_deterministic(self):
        assert draw_pair((1, 2, 3)) == draw_pair((1, 2, 3))
        assert draw_pair((1, 2, 3)) != draw_pair((1, 2, 4))

    def test_reflexive_mix(self):
        for t in range(20):
            x, y = draw_pair((0, 0, t), mix=(("reflexive", 1.0),))
            assert x == y


class TestCheckItem:
    def test_unknown_item(self):
        with pytest.raises(UnknownItem):
            check_item("5.7-1", 1)

    def test_reflexive_pairs_pass(self):
        rep = check_item("5.5-2", 50, mix=(("reflexive", 1.0),))
        assert rep.status == "passed"
        assert rep.antecedent_hits == 50
        assert rep.counterexamples == ()

    def test_vacuous_under_unsatisfiable_threshold(self):
        rep = check_item("5.5-2", 40, cfg=OrderCheckConfig(threshold=1e6))
        assert rep.antecedent_hits == 0
        assert rep.status == "vacuous"

    def test_geometric_pairs_cross_checked(self):
        rep = check_item("5.5-2", 500, mix=(("geometric", 1.0),))
        assert rep.status in ("passed", "falsified")
        assert rep.antecedent_hits > 0
        for cx in rep.counterexamples:
            assert set(cx.classical) == {"st", "hr", "lr"}
            again = replay("5.5-2", cx.seed, mix=(("geometric", 1.0),))
            assert again.antecedent == "yes" and again.consequent == "no"

    def test_status_invariants(self):
        for item in ITEMS:
            rep = check_item(item, 60, master_seed=7)
            assert (rep.status == "vacuous") == (rep.antecedent_hits == 0)
            assert (rep.status == "falsified") == bool(rep.counterexamples)
            assert rep.antecedent_hits + rep.inconclusive <= 2 * rep.trials

    def test_report_is_byte_identical(self):
        a = dumps(check_item("5.5-5", 80, master_seed=3))
        b = dumps(check_item("5.5-5", 80, master_seed=3))
        assert a == b
        data = json.loads(a)
        assert data["theorem_item"] == "5.5-5"
        for cx in data["counterexamples"]:
            assert len(cx["seed"]) == 3

    def test_counterexamples_replay(self):
        rep = check_item("5.6-3", 200, master_seed=1)
        for cx in rep.counterexamples:
            out = replay("5.6-3", cx.seed)
            assert out.antecedent == "yes" and out.consequent == "no"
            xs, ys = draw_pair(cx.seed)
            assert (xs, ys) == (cx.x_spec, cx.y_spec)

    def test_item_table(self):
        table = item_table()
        assert [r["item"] for r in table] == list(ITEMS)
        assert len(table) == 9


class TestProofInequalities:
    def test_reflexive_zero(self):
        d = geo(0.4)
        p = proof_inequality_check(d, d)
        assert p.as_tuple() == (True, True, True)
        assert all(v == 0.0 for v in p.difference + p.rearranged + p.prefix)

    def test_geometric_pair(self):
        X, Y = geo(0.5), geo(0.3)
        p = proof_inequality_check(X, Y)
        assert p.as_tuple() == (True, True, True)
        # constant hazards: R = 5/3 on the common mask
        cfg = OrderCheckConfig()
        mask = np.arange(201) < np.sum(0.5 ** np.arange(201) > 1e-9)
        for z, v in zip(cfg.z_grid, p.rearranged):
            w = z ** -np.arange(201.0)
            want = np.sum((5 / 3 - 3 / 5) * w[mask])
            assert v == pytest.approx(want, rel=1e-9)
        assert_allclose(p.difference, p.rearranged, rtol=1e-12)

    def test_precondition(self):
        assert hazard_rate_order(geo(0.3), geo(0.5)).holds == "no"
        with pytest.raises(PreconditionError):
            proof_inequality_check(geo(0.3), geo(0.5))

    def test_fuzzy_equivalence(self):
        base = DistributionSpec("fuzzy-perturbed", (6, 0.04), seed=11).generate()
        p = proof_inequality_check(base, base)
        assert p.difference_holds == p.rearranged_holds

    def test_unnormalized_endpoint_rows(self):
        # fuzzy endpoint rows do not sum to one; both forms must still agree
        rep = check_item("5.5-5", 300, mix=(("fuzzy-perturbed", 1.0),))
        assert rep.antecedent_hits > 0
        assert rep.equivalence_checked == rep.antecedent_hits
        assert rep.equivalence_mismatches == 0
