"""Randomized checks of the implication claims between transform orders.

Each item identifier (``5.5-1`` ... ``5.5-5``, ``5.6-1`` ... ``5.6-4``) maps to
one antecedent and one consequent built from the comparators in
:mod:`zorder.orders`.  The harness draws seeded ``(X, Y)`` pairs, evaluates
the antecedent, and whenever it holds evaluates the consequent.  A pair for
which the antecedent holds and the consequent fails is a counterexample.

Two-variable forms of the four-argument comparators compare a pair against
itself swapped::

    RH(X, Y)   = relative_hazard_order(X, Y, Y, X)
    RMRL(X, Y) = relative_mrl_order(X, Y, Y, X)

so ``RH(X, Y)`` asks whether the transformed ``h_X / h_Y`` dominates the
transformed ``h_Y / h_X``.

Limit conditions on ``g / f`` (the ratio of Y's pmf to X's near the origin)
cannot be evaluated on a finite pmf.  They are screened at the first and
last common-support indices with a relative margin (default 10%).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    InvalidFamilyParameters,
    PreconditionError,
    UnknownItem,
    ZOrderError,
)
from .fuzzy import DEFAULT_LEVELS, FuzzyNumber, Interval
from .orders import (
    INDETERMINATE,
    NO,
    YES,
    Evidence,
    LifetimeDistribution,
    OrderCheckConfig,
    OrderVerdict,
    _endpoints,
    _hazard,
    _length,
    _weights,
    aging_intensity_order,
    classical_orders,
    expectation_order,
    hazard_rate_order,
    likelihood_ratio_order,
    monotonicity,
    mrl_order,
    relative_hazard_order,
    relative_mrl_order,
    reliability,
)

__all__ = [
    "ITEMS",
    "FAMILIES",
    "DEFAULT_MIX",
    "DistributionSpec",
    "Counterexample",
    "PropertyReport",
    "ProofInequalities",
    "generate",
    "draw_pair",
    "check_item",
    "replay",
    "proof_inequality_check",
    "item_table",
]

FAMILIES = ("geometric", "truncated-random", "two-point", "fuzzy-perturbed")
DEFAULT_MIX = (
    ("geometric", 0.35),
    ("truncated-random", 0.25),
    ("two-point", 0.10),
    ("fuzzy-perturbed", 0.15),
    ("reflexive", 0.15),
)
LIMIT_MARGIN = 0.1
GEOMETRIC_N_MAX = 200


# -- generators --------------------------------------------------------------


@dataclass(frozen=True)
class DistributionSpec:
    """Recipe for a reproducible distribution.

    ``parameters`` per family:

    * ``geometric``: ``[p]`` with ``0 < p < 1``;
    * ``truncated-random``: ``[n_max]``;
    * ``two-point``: ``[n1, w1, n2, w2]`` with ``w1 + w2 = 1``;
    * ``fuzzy-perturbed``: ``[n_max, delta]``, base weights drawn as for
      ``truncated-random``.
    """

    family: str
    parameters: tuple[float, ...]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "parameters", tuple(float(v) for v in self.parameters))
        object.__setattr__(self, "seed", int(self.seed))

    def generate(self) -> LifetimeDistribution:
        return generate(self)

    def to_dict(self) -> dict:
        return {"family": self.family, "parameters": list(self.parameters), "seed": self.seed}

    @classmethod
    def from_dict(cls, data: dict) -> DistributionSpec:
        return cls(data["family"], tuple(data["parameters"]), data.get("seed", 0))


def _as_count(value: float, name: str) -> int:
    if not (math.isfinite(value) and value == int(value) and value >= 0):
        raise InvalidFamilyParameters(f"{name} must be a nonnegative integer, got {value}")
    return int(value)


def _random_weights(n_max: int, seed: int) -> np.ndarray:
    w = np.random.default_rng(seed).uniform(size=n_max + 1)
    return w / w.sum()


def generate(spec: DistributionSpec) -> LifetimeDistribution:
    """Deterministic distribution for ``spec``."""
    fam, par = spec.family, spec.parameters
    try:
        if fam == "geometric":
            if len(par) != 1 or not 0.0 < par[0] < 1.0:
                raise InvalidFamilyParameters(f"geometric needs [p] with 0 < p < 1, got {list(par)}")
            return LifetimeDistribution.geometric(par[0], GEOMETRIC_N_MAX)
        if fam == "truncated-random":
            if len(par) != 1:
                raise InvalidFamilyParameters(f"truncated-random needs [n_max], got {list(par)}")
            n_max = _as_count(par[0], "n_max")
            return LifetimeDistribution.crisp(_random_weights(n_max, spec.seed), label=f"random:{n_max}")
        if fam == "two-point":
            if len(par) != 4:
                raise InvalidFamilyParameters(f"two-point needs [n1, w1, n2, w2], got {list(par)}")
            n1, n2 = _as_count(par[0], "n1"), _as_count(par[2], "n2")
            if n1 == n2:
                raise InvalidFamilyParameters("two-point indices must differ")
            return LifetimeDistribution.point_masses({n1: par[1], n2: par[3]})
        if fam == "fuzzy-perturbed":
            if len(par) != 2 or not (math.isfinite(par[1]) and par[1] >= 0):
                raise InvalidFamilyParameters(f"fuzzy-perturbed needs [n_max, delta >= 0], got {list(par)}")
            n_max = _as_count(par[0], "n_max")
            base = _random_weights(n_max, spec.seed)
            delta = par[1]
            numbers = [
                FuzzyNumber(
                    DEFAULT_LEVELS,
                    tuple(Interval(max(0.0, f - delta * (1 - a)), f + delta * (1 - a)) for a in DEFAULT_LEVELS),
                )
                for f in base
            ]
            return LifetimeDistribution.from_fuzzy(numbers, label=f"fuzzy:{n_max}:{delta:g}")
    except InvalidFamilyParameters:
        raise
    except ZOrderError as exc:
        raise InvalidFamilyParameters(f"{fam} {list(par)}: {exc}") from exc
    raise InvalidFamilyParameters(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def _draw_spec(family: str, rng: np.random.Generator) -> DistributionSpec:
    seed = int(rng.integers(2**31))
    if family == "geometric":
        return DistributionSpec(family, (round(float(rng.uniform(0.1, 0.9)), 6),), seed)
    if family == "truncated-random":
        return DistributionSpec(family, (int(rng.integers(1, 13)),), seed)
    if family == "two-point":
        n1, n2 = sorted(int(v) for v in rng.choice(11, size=2, replace=False))
        w = round(float(rng.uniform(0.05, 0.95)), 6)
        return DistributionSpec(family, (n1, w, n2, round(1.0 - w, 6)), seed)
    if family == "fuzzy-perturbed":
        return DistributionSpec(family, (int(rng.integers(1, 9)), round(float(rng.uniform(0.0, 0.05)), 6)), seed)
    raise InvalidFamilyParameters(f"unknown family {family!r}")


def draw_pair(seed: Sequence[int], mix=DEFAULT_MIX) -> tuple[DistributionSpec, DistributionSpec]:
    """Specs for one trial, fully determined by ``seed``."""
    rng = np.random.default_rng(np.random.SeedSequence(list(seed)))
    names = [m[0] for m in mix]
    weights = np.array([m[1] for m in mix], dtype=float)
    family = names[int(rng.choice(len(names), p=weights / weights.sum()))]
    if family == "reflexive":
        x = _draw_spec("geometric" if rng.uniform() < 0.5 else "truncated-random", rng)
        return x, x
    return _draw_spec(family, rng), _draw_spec(family, rng)


# -- item logic --------------------------------------------------------------


@dataclass(frozen=True)
class Outcome:
    antecedent: str
    consequent: str = INDETERMINATE
    witness: Evidence | None = None
    detail: str = ""


def _branch_holds(verdict: OrderVerdict, branch: str) -> str:
    """Verdict restricted to the min-ratio or max-ratio column."""
    bar = verdict.threshold - verdict.tolerance
    values = [getattr(e, f"{branch}_ratio") for e in verdict.evidence]
    if any(not math.isnan(v) and v < bar for v in values):
        return NO
    if any(math.isnan(v) for v in values):
        return INDETERMINATE
    return YES


def _branch_witness(verdict: OrderVerdict, branch: str) -> Evidence | None:
    bar = verdict.threshold - verdict.tolerance
    for e in verdict.evidence:
        v = getattr(e, f"{branch}_ratio")
        if not math.isnan(v) and v < bar:
            return e
    return None


def _all(*states: str) -> str:
    if any(s == NO for s in states):
        return NO
    if any(s == INDETERMINATE for s in states):
        return INDETERMINATE
    return YES


def _monotone(values: np.ndarray) -> bool:
    return monotonicity(values) != "none"


def _limit_ratios(X: LifetimeDistribution, Y: LifetimeDistribution) -> tuple[float, float]:
    length = _length(X, Y)
    f, g = X.padded(length), Y.padded(length)
    common = np.flatnonzero((f > 0) & (g > 0))
    if common.size == 0:
        return math.nan, math.nan
    return float(g[common[0]] / f[common[0]]), float(g[common[-1]] / f[common[-1]])


def _screen(X, Y, rule: str, margin: float) -> bool:
    ratios = _limit_ratios(X, Y)
    if any(math.isnan(r) for r in ratios):
        return False
    if rule == "at-most-one":
        return all(r <= 1.0 - margin for r in ratios)
    if rule == "finite":
        return all(r <= 1.0 / margin for r in ratios)
    if rule == "positive":
        return all(r >= margin for r in ratios)
    raise ValueError(rule)


def _rh(X, Y, cfg):
    return relative_hazard_order(X, Y, Y, X, cfg)


def _rmrl(X, Y, cfg):
    return relative_mrl_order(X, Y, Y, X, cfg)


def _from_verdict(antecedent: str, consequent: OrderVerdict) -> Outcome:
    if antecedent != YES:
        return Outcome(antecedent)
    return Outcome(YES, consequent.holds, consequent.witness, consequent.kind)


def _item_5_5_1(X, Y, cfg, margin):
    rh = _rh(X, Y, cfg)
    hx, hy = reliability(X, cfg.tolerance).hazard, reliability(Y, cfg.tolerance).hazard
    ante = _all(_branch_holds(rh, "min"), YES if _monotone(hx) and _monotone(hy) else NO)
    if ante != YES:
        return Outcome(ante)
    return Outcome(YES, _branch_holds(rh, "max"), _branch_witness(rh, "max"), "relative-hazard max branch")


def _item_5_5_2(X, Y, cfg, margin):
    ante = hazard_rate_order(Y, X, cfg).holds
    if ante != YES:
        return Outcome(ante)
    return _from_verdict(ante, likelihood_ratio_order(Y, X, cfg))


def _item_5_5_3(X, Y, cfg, margin):
    ante = _rh(X, Y, cfg).holds
    if ante != YES:
        return Outcome(ante)
    aging = aging_intensity_order(X, Y, cfg)
    if aging.holds != YES:
        return Outcome(YES, aging.holds, aging.witness, aging.kind)
    values = _proof_values(X, Y, cfg)
    for z, v in zip(cfg.z_grid, values.prefix):
        if v < -cfg.tolerance:
            e = Evidence(z, None, None, v, v, (v, 0.0), (v, 0.0))
            return Outcome(YES, NO, e, "prefix-integrated hazard difference")
    return Outcome(YES, YES)


def _item_5_5_4(X, Y, cfg, margin):
    if not _screen(X, Y, "at-most-one", margin):
        return Outcome(NO, detail="limit screen")
    ante = _rh(X, Y, cfg).holds
    if ante != YES:
        return Outcome(ante)
    return _from_verdict(ante, hazard_rate_order(X, Y, cfg))


def _item_5_5_5(X, Y, cfg, margin):
    if not _screen(X, Y, "finite", margin):
        return Outcome(NO, detail="limit screen")
    ante = _rh(X, Y, cfg).holds
    if ante != YES:
        return Outcome(ante)
    return _from_verdict(ante, likelihood_ratio_order(X, Y, cfg))


def _item_5_6_1(X, Y, cfg, margin):
    rm = _rmrl(X, Y, cfg)
    mx, my = reliability(X, cfg.tolerance).mrl, reliability(Y, cfg.tolerance).mrl
    ante = _all(_branch_holds(rm, "min"), YES if _monotone(mx) and _monotone(my) else NO)
    if ante != YES:
        return Outcome(ante)
    return Outcome(YES, _branch_holds(rm, "max"), _branch_witness(rm, "max"), "relative-mrl max branch")


def _item_5_6_2(X, Y, cfg, margin):
    mx, my = reliability(X, cfg.tolerance).mrl, reliability(Y, cfg.tolerance).mrl
    if not (_monotone(mx) and _monotone(my)):
        return Outcome(NO, detail="mrl not monotone")
    ante = _all(_rmrl(X, Y, cfg).holds, _rmrl(Y, X, cfg).holds)
    if ante != YES:
        return Outcome(ante)
    return _from_verdict(ante, hazard_rate_order(Y, X, cfg))


def _item_5_6_3(X, Y, cfg, margin):
    if not _screen(X, Y, "positive", margin):
        return Outcome(NO, detail="limit screen")
    ante = mrl_order(X, Y, cfg).holds
    if ante != YES:
        return Outcome(ante)
    return _from_verdict(ante, hazard_rate_order(Y, X, cfg))


def _item_5_6_4(X, Y, cfg, margin):
    ante = _all(expectation_order(Y, X, cfg).holds, _rmrl(X, Y, cfg).holds)
    if ante != YES:
        return Outcome(ante)
    return _from_verdict(ante, mrl_order(X, Y, cfg))


@dataclass(frozen=True)
class ItemDefinition:
    identifier: str
    antecedent: str
    consequent: str
    check: Callable = field(repr=False)


ITEMS: dict[str, ItemDefinition] = {
    d.identifier: d
    for d in (
        ItemDefinition(
            "5.5-1",
            "RH(X, Y) on the min branch; hazards of X and Y both monotone",
            "RH(X, Y) on the max branch",
            _item_5_5_1,
        ),
        ItemDefinition("5.5-2", "hazard(Y, X)", "likelihood-ratio(Y, X)", _item_5_5_2),
        ItemDefinition(
            "5.5-3",
            "RH(X, Y)",
            "aging-intensity(X, Y) at x_limit = y_limit = common N_max; prefix-integrated hazard difference >= 0",
            _item_5_5_3,
        ),
        ItemDefinition(
            "5.5-4",
            "g/f <= 1 - margin at first and last common support index; RH(X, Y)",
            "hazard(X, Y)",
            _item_5_5_4,
        ),
        ItemDefinition(
            "5.5-5",
            "g/f <= 1/margin at first and last common support index; RH(X, Y)",
            "likelihood-ratio(X, Y)",
            _item_5_5_5,
        ),
        ItemDefinition(
            "5.6-1",
            "RMRL(X, Y) on the min branch; MRLs of X and Y both monotone",
            "RMRL(X, Y) on the max branch",
            _item_5_6_1,
        ),
        ItemDefinition(
            "5.6-2",
            "RMRL(X, Y) and RMRL(Y, X); MRLs of X and Y both monotone",
            "hazard(Y, X)",
            _item_5_6_2,
        ),
        ItemDefinition(
            "5.6-3",
            "g/f >= margin at first and last common support index; mrl(X, Y)",
            "hazard(Y, X)",
            _item_5_6_3,
        ),
        ItemDefinition(
            "5.6-4",
            "expectation(Y, X); RMRL(X, Y)",
            "mrl(X, Y)",
            _item_5_6_4,
        ),
    )
}


def item_table() -> list[dict]:
    return [{"item": d.identifier, "antecedent": d.antecedent, "consequent": d.consequent} for d in ITEMS.values()]


def _lookup(item: str) -> tuple[int, ItemDefinition]:
    for k, (name, d) in enumerate(ITEMS.items()):
        if name == item:
            return k, d
    raise UnknownItem(f"unknown theorem item {item!r}; expected one of {', '.join(ITEMS)}")


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    seed: tuple[int, int, int]
    x_spec: DistributionSpec
    y_spec: DistributionSpec
    grid_point: Evidence | None
    classical: dict
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "seed": list(self.seed),
            "x_spec": self.x_spec.to_dict(),
            "y_spec": self.y_spec.to_dict(),
            "grid_point": None if self.grid_point is None else self.grid_point.to_dict(),
            "classical": self.classical,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class PropertyReport:
    theorem_item: str
    trials: int
    antecedent_hits: int
    inconclusive: int
    counterexamples: tuple[Counterexample, ...]
    status: str
    equivalence_checked: int = 0
    equivalence_mismatches: int = 0

    def to_dict(self) -> dict:
        return {
            "theorem_item": self.theorem_item,
            "trials": self.trials,
            "antecedent_hits": self.antecedent_hits,
            "inconclusive": self.inconclusive,
            "status": self.status,
            "equivalence_checked": self.equivalence_checked,
            "equivalence_mismatches": self.equivalence_mismatches,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def _evaluate(definition: ItemDefinition, X, Y, cfg, margin) -> Outcome:
    try:
        return definition.check(X, Y, cfg, margin)
    except ZOrderError as exc:
        return Outcome(INDETERMINATE, detail=str(exc))


def check_item(
    item: str,
    trials: int = 500,
    cfg: OrderCheckConfig | None = None,
    master_seed: int = 0,
    mix=DEFAULT_MIX,
    margin: float = LIMIT_MARGIN,
) -> PropertyReport:
    """Run ``trials`` seeded pairs through ``item``.

    Antecedent errors and indeterminate verdicts are counted as
    inconclusive.  Every counterexample is replayed from its seed before it
    is reported and carries the classical-order report of its pair.
    """
    index, definition = _lookup(item)
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    cfg = cfg or OrderCheckConfig()
    hits = inconclusive = checked = mismatches = 0
    found = []
    for trial in range(trials):
        seed = (int(master_seed), index, trial)
        xs, ys = draw_pair(seed, mix)
        X, Y = xs.generate(), ys.generate()
        outcome = _evaluate(definition, X, Y, cfg, margin)
        if outcome.antecedent == INDETERMINATE:
            inconclusive += 1
            continue
        if outcome.antecedent != YES:
            continue
        hits += 1
        eq = _equivalence(X, Y, cfg)
        if eq is not None:
            checked += 1
            mismatches += not eq
        if outcome.consequent == INDETERMINATE:
            inconclusive += 1
        elif outcome.consequent == NO:
            again = _evaluate(definition, *draw_pair_distributions(seed, mix), cfg, margin)
            if again.consequent != NO:
                raise RuntimeError(f"counterexample at seed {seed} did not replay")
            found.append(
                Counterexample(seed, xs, ys, outcome.witness, classical_orders(X, Y).to_dict(), outcome.detail)
            )
    if found:
        status = "falsified"
    elif hits == 0:
        status = "vacuous"
    else:
        status = "passed"
    return PropertyReport(item, trials, hits, inconclusive, tuple(found), status, checked, mismatches)


def draw_pair_distributions(seed: Sequence[int], mix=DEFAULT_MIX) -> tuple[LifetimeDistribution, LifetimeDistribution]:
    xs, ys = draw_pair(seed, mix)
    return xs.generate(), ys.generate()


def replay(
    item: str,
    seed: Sequence[int],
    cfg: OrderCheckConfig | None = None,
    mix=DEFAULT_MIX,
    margin: float = LIMIT_MARGIN,
) -> Outcome:
    """Re-run a single trial of ``item`` from its seed triple."""
    _, definition = _lookup(item)
    X, Y = draw_pair_distributions(seed, mix)
    return _evaluate(definition, X, Y, cfg or OrderCheckConfig(), margin)


# -- proof inequalities ------------------------------------------------------


@dataclass(frozen=True)
class ProofInequalities:
    """Per-``z`` values of the three chained differences and their verdicts."""

    z_grid: tuple[float, ...]
    difference: tuple[float, ...]
    rearranged: tuple[float, ...]
    prefix: tuple[float, ...]
    tolerance: float

    def _ok(self, values) -> bool:
        return all(v >= -self.tolerance for v in values)

    @property
    def difference_holds(self) -> bool:
        return self._ok(self.difference)

    @property
    def rearranged_holds(self) -> bool:
        return self._ok(self.rearranged)

    @property
    def prefix_holds(self) -> bool:
        return self._ok(self.prefix)

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return self.difference_holds, self.rearranged_holds, self.prefix_holds


def _proof_values(X, Y, cfg: OrderCheckConfig) -> ProofInequalities:
    pairs = cfg.pairs
    length = _length(X, Y)
    (fx, _), (fy, _) = _endpoints((X, Y), pairs, length)
    hx, hy = _hazard(fx, cfg.tolerance), _hazard(fy, cfg.tolerance)
    # tails on the same scale as the endpoint rows, which need not sum to one
    sx = np.cumsum(fx[..., ::-1], axis=-1)[..., ::-1]
    sy = np.cumsum(fy[..., ::-1], axis=-1)[..., ::-1]
    mask = np.isfinite(hx) & np.isfinite(hy) & (hx > cfg.tolerance) & (hy > cfg.tolerance)

    def masked(num, den):
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(mask, num / np.where(mask, den, 1.0), 0.0)

    # pmf ratio over survival ratio, then the same quantity as a ratio of hazards
    split = masked(fx, fy) / np.where(mask, masked(sx, sy), 1.0)
    split_inv = masked(fy, fx) / np.where(mask, masked(sy, sx), 1.0)
    r, r_inv = masked(hx, hy), masked(hy, hx)

    w = _weights(length, cfg.z_grid)[None]  # (1, L, Z)

    def gap(a, b):
        return (a[:, :, None] * w).sum(axis=1).min(axis=0) - (b[:, :, None] * w).sum(axis=1).min(axis=0)

    difference = gap(split, split_inv)
    rearranged = gap(r, r_inv)
    ta = np.cumsum(r[:, :, None] * w, axis=1).min(axis=0)  # (L, Z)
    tb = np.cumsum(r_inv[:, :, None] * w, axis=1).min(axis=0)
    prefix = (ta - tb).sum(axis=0)
    return ProofInequalities(
        tuple(cfg.z_grid),
        tuple(float(v) for v in difference),
        tuple(float(v) for v in rearranged),
        tuple(float(v) for v in prefix),
        cfg.tolerance,
    )


def proof_inequality_check(
    X: LifetimeDistribution, Y: LifetimeDistribution, cfg: OrderCheckConfig | None = None
) -> ProofInequalities:
    """Evaluate the hazard-ratio difference, its termwise rearrangement and
    its prefix-accumulated form on the grid.

    On lower endpoints, with ``Q = (f_X / f_Y) / (S_X / S_Y)`` and the same
    quantity rearranged as ``R = h_X / h_Y``, per ``z``::

        difference  = min_p sum Q w  -  min_p sum (1/Q) w
        rearranged  = min_p sum R w  -  min_p sum (1/R) w
        prefix      = sum_K [min_p sum_{n <= K} R w  -  min_p sum_{n <= K} (1/R) w]

    ``Q`` and ``R`` agree algebraically, so the first two differ only by
    rounding; checking that their signs agree tests the rearrangement on the
    computed values rather than assuming it.

    Requires ``hazard_rate_order(X, Y)`` to hold.
    """
    cfg = cfg or OrderCheckConfig()
    if hazard_rate_order(X, Y, cfg).holds != YES:
        raise PreconditionError("proof inequalities need hazard_rate_order(X, Y) to hold")
    return _proof_values(X, Y, cfg)


def _equivalence(X, Y, cfg) -> bool | None:
    """Whether the difference and rearranged forms agree in sign, or None
    when they cannot be evaluated for the pair.  The two forms are equal
    term by term, so no ordering precondition is imposed here."""
    try:
        p = _proof_values(X, Y, cfg)
    except ZOrderError:
        return None
    return p.difference_holds == p.rearranged_holds
