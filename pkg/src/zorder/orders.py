"""Discrete lifetime distributions and transform-based stochastic orders.

Conventions used throughout:

* survival ``S(n) = P(X >= n)``; hazard ``h(n) = f(n) / S(n)``, so
  ``0 <= h <= 1`` and ``h(N_max) = 1``;
* mean residual life ``m(n) = sum_{k>n} S(k) / S(n)``;
* the transform of a nonnegative sequence ``s`` at a real point ``z > 1`` is
  ``sum_n s(n) z**-n``.  The weights decrease in ``n``, so mass placed earlier
  produces a larger transform.

Every comparator returns an :class:`OrderVerdict`.  At each ``z`` on the grid
it forms two ratios: the minimum over ``(alpha, beta)`` pairs of the
numerator's lower-endpoint transform over the same minimum for the
denominator, and the analogous ratio of maxima taken on upper endpoints.  The
order holds when every ratio is at least ``threshold - tolerance``.  For crisp
distributions both ratios coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    EmptyCommonSupport,
    InputError,
    PreconditionError,
)
from .fuzzy import AlphaBetaPair, FuzzyNumber, alpha_beta_pairs
from .quadrature import adaptive_simpson

__all__ = [
    "LifetimeDistribution",
    "ReliabilityFunctions",
    "OrderCheckConfig",
    "Evidence",
    "OrderVerdict",
    "ClassicalRelation",
    "ClassicalOrderReport",
    "reliability",
    "expectation_order",
    "hazard_rate_order",
    "relative_hazard_order",
    "likelihood_ratio_order",
    "mrl_order",
    "relative_mrl_order",
    "aging_intensity_order",
    "integrated_transform",
    "integrated_dominance",
    "classical_orders",
    "monotonicity",
    "ORDER_KINDS",
]

YES, NO, INDETERMINATE = "yes", "no", "indeterminate"
UNDERFLOW = np.finfo(float).tiny
PMF_SUM_TOL = 1e-9


# -- distributions ----------------------------------------------------------


class LifetimeDistribution:
    """Probability mass on ``0..N_max``, crisp or fuzzy.

    A fuzzy distribution keeps one :class:`FuzzyNumber` per index;
    :attr:`pmf` is then the midpoint projection of the level-1 cuts.
    """

    __slots__ = ("pmf", "fuzzy", "truncation_error", "label")

    def __init__(self, pmf, fuzzy=None, truncation_error: float = 0.0, label: str = ""):
        arr = np.array(pmf, dtype=float)
        arr.setflags(write=False)
        self.pmf = arr
        self.fuzzy = None if fuzzy is None else tuple(fuzzy)
        self.truncation_error = float(truncation_error)
        self.label = label

    # constructors

    @classmethod
    def crisp(cls, pmf: Sequence[float], label: str = "") -> LifetimeDistribution:
        arr = np.asarray(pmf, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise InputError("pmf must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise InputError("pmf entries must be finite")
        bad = np.flatnonzero(arr < 0)
        if bad.size:
            raise InputError(f"pmf entry f({bad[0]}) = {arr[bad[0]]} is negative")
        total = float(arr.sum())
        if abs(total - 1.0) > PMF_SUM_TOL:
            raise InputError(f"pmf sums to {total:.17g}, not 1")
        return cls(arr, label=label)

    @classmethod
    def from_fuzzy(cls, numbers: Sequence[FuzzyNumber], label: str = "") -> LifetimeDistribution:
        numbers = tuple(numbers)
        if not numbers:
            raise InputError("fuzzy pmf must be nonempty")
        for n, fn in enumerate(numbers):
            if fn.cuts[0].lo < 0:
                raise InputError(f"fuzzy pmf at n={n} has negative lower bound {fn.cuts[0].lo}")
        mids = np.array([fn.core.midpoint for fn in numbers])
        total = float(mids.sum())
        if abs(total - 1.0) > PMF_SUM_TOL:
            raise InputError(f"fuzzy pmf core midpoints sum to {total:.17g}, not 1")
        return cls(mids, fuzzy=numbers, label=label)

    @classmethod
    def geometric(cls, p: float, n_max: int = 200) -> LifetimeDistribution:
        """``f(n) = p (1-p)**n`` on ``0..n_max``, renormalized over the kept mass."""
        p = float(p)
        if not 0.0 < p < 1.0:
            raise InputError(f"geometric parameter must lie in (0, 1), got {p}")
        if n_max < 0:
            raise InputError("n_max must be nonnegative")
        n = np.arange(n_max + 1)
        raw = p * (1.0 - p) ** n
        kept = float(raw.sum())
        return cls(raw / kept, truncation_error=1.0 - kept, label=f"geo:{p:g}")

    @classmethod
    def point_masses(cls, masses: Mapping[int, float]) -> LifetimeDistribution:
        if not masses:
            raise InputError("need at least one point mass")
        top = max(int(k) for k in masses)
        if min(int(k) for k in masses) < 0:
            raise InputError("lifetimes live on nonnegative integers")
        pmf = np.zeros(top + 1)
        for k, w in masses.items():
            pmf[int(k)] += float(w)
        label = "point:" + ",".join(f"{int(k)}={float(w):g}" for k, w in sorted(masses.items()))
        return cls.crisp(pmf, label=label)

    # properties

    @property
    def n_max(self) -> int:
        return self.pmf.size - 1

    @property
    def is_fuzzy(self) -> bool:
        return self.fuzzy is not None

    def padded(self, length: int) -> np.ndarray:
        out = np.zeros(length)
        out[: self.pmf.size] = self.pmf
        return out

    def endpoint_sequences(self, pairs: Sequence[AlphaBetaPair], length: int) -> tuple[np.ndarray, np.ndarray]:
        """Lower and upper endpoint pmfs, one row per pair, zero padded to ``length``."""
        lo = np.zeros((len(pairs), length))
        hi = np.zeros((len(pairs), length))
        if self.fuzzy is None:
            lo[:, : self.pmf.size] = self.pmf
            hi[:, : self.pmf.size] = self.pmf
            return lo, hi
        alphas = np.array([p.alpha for p in pairs])
        betas = np.array([p.beta for p in pairs])
        for n, fn in enumerate(self.fuzzy):
            lo[:, n] = np.interp(alphas, fn.levels, [c.lo for c in fn.cuts])
            hi[:, n] = np.interp(betas, fn.levels, [c.hi for c in fn.cuts])
        return lo, hi

    def to_dict(self) -> dict:
        if self.fuzzy is not None:
            return {"samples": [fn.to_dict(n) for n, fn in enumerate(self.fuzzy)]}
        return {"pmf": self.pmf.tolist()}

    def __repr__(self):
        kind = "fuzzy" if self.is_fuzzy else "crisp"
        return f"LifetimeDistribution({kind}, n_max={self.n_max}{', ' + self.label if self.label else ''})"


# -- reliability ------------------------------------------------------------


def _survival(seq: np.ndarray) -> np.ndarray:
    """Reverse cumulative sums along the last axis, normalized to ``S(0) = 1``."""
    tail = np.cumsum(seq[..., ::-1], axis=-1)[..., ::-1]
    total = tail[..., :1]
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(total > 0, tail / np.where(total > 0, total, 1.0), 0.0)


def _hazard(seq: np.ndarray, floor: float) -> np.ndarray:
    surv = _survival(seq)
    tail = np.cumsum(seq[..., ::-1], axis=-1)[..., ::-1]
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(surv > floor, seq / np.where(tail > 0, tail, 1.0), np.nan)


def _mrl(seq: np.ndarray, floor: float) -> np.ndarray:
    surv = _survival(seq)
    after = np.cumsum(surv[..., ::-1], axis=-1)[..., ::-1]
    beyond = np.concatenate([after[..., 1:], np.zeros(after.shape[:-1] + (1,))], axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(surv > floor, beyond / np.where(surv > 0, surv, 1.0), np.nan)


@dataclass(frozen=True)
class ReliabilityFunctions:
    """``survival`` has ``N_max + 2`` entries (ending in 0); ``hazard`` and
    ``mrl`` have ``N_max + 1`` entries, NaN where the survival is at or below
    the floor."""

    survival: np.ndarray
    hazard: np.ndarray
    mrl: np.ndarray


def reliability(dist: LifetimeDistribution, tolerance: float = 1e-9) -> ReliabilityFunctions:
    f = dist.pmf
    surv = np.append(_survival(f), 0.0)
    return ReliabilityFunctions(surv, _hazard(f, tolerance), _mrl(f, tolerance))


def monotonicity(values: np.ndarray, atol: float = 1e-12) -> str:
    """Classify the finite part of ``values``: ``constant``, ``increasing``,
    ``decreasing`` (all non-strict) or ``none``."""
    v = values[np.isfinite(values)]
    if v.size < 2:
        return "constant"
    d = np.diff(v)
    up = bool(np.all(d >= -atol))
    down = bool(np.all(d <= atol))
    if up and down:
        return "constant"
    if up:
        return "increasing"
    if down:
        return "decreasing"
    return "none"


# -- configuration and verdicts ---------------------------------------------


@dataclass(frozen=True)
class OrderCheckConfig:
    """Evaluation grid and acceptance rule for the transform comparators.

    ``threshold=1`` reads "numerator dominates denominator".  ``threshold=0``
    reproduces the literal ``ratio >= 0`` form, which every nonnegative input
    satisfies.
    """

    z_grid: tuple[float, ...] = (1.25, 1.5, 2.0, 4.0)
    alpha_grid: tuple[float, ...] = (0.0, 0.5, 1.0)
    threshold: float = 1.0
    tolerance: float = 1e-9

    def __post_init__(self):
        z = tuple(float(v) for v in self.z_grid)
        a = tuple(float(v) for v in self.alpha_grid)
        if not z:
            raise InputError("z_grid must be nonempty")
        if any(not (math.isfinite(v) and v > 1.0) for v in z):
            raise InputError(f"every z_grid value must be a finite real > 1, got {z}")
        if not a:
            raise InputError("alpha_grid must be nonempty")
        if any(not 0.0 <= v <= 1.0 for v in a):
            raise InputError(f"alpha_grid levels must lie in [0, 1], got {a}")
        if not (math.isfinite(self.threshold) and self.threshold >= 0.0):
            raise InputError(f"threshold must be a finite real >= 0, got {self.threshold}")
        if not (math.isfinite(self.tolerance) and self.tolerance >= 0.0):
            raise InputError(f"tolerance must be a finite real >= 0, got {self.tolerance}")
        object.__setattr__(self, "z_grid", tuple(sorted(z)))
        object.__setattr__(self, "alpha_grid", tuple(sorted(set(a))))
        object.__setattr__(self, "threshold", float(self.threshold))
        object.__setattr__(self, "tolerance", float(self.tolerance))

    @property
    def pairs(self) -> list[AlphaBetaPair]:
        return alpha_beta_pairs(self.alpha_grid)

    def to_dict(self) -> dict:
        return {
            "z_grid": list(self.z_grid),
            "alpha_grid": list(self.alpha_grid),
            "threshold": self.threshold,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class Evidence:
    """One grid point.  ``alpha``/``beta`` is the pair at which the
    numerator's minimum was attained; ``min_terms`` and ``max_terms`` are the
    raw ``(numerator, denominator)`` of each ratio."""

    z: float | None
    alpha: float | None
    beta: float | None
    min_ratio: float
    max_ratio: float
    min_terms: tuple[float, float]
    max_terms: tuple[float, float]

    def to_dict(self) -> dict:
        return {
            "z": self.z,
            "alpha": self.alpha,
            "beta": self.beta,
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "min_terms": list(self.min_terms),
            "max_terms": list(self.max_terms),
        }


@dataclass(frozen=True)
class OrderVerdict:
    kind: str
    holds: str
    threshold: float
    tolerance: float
    evidence: tuple[Evidence, ...]
    witness: Evidence | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.holds == YES

    def ratios(self) -> np.ndarray:
        return np.array([[e.min_ratio, e.max_ratio] for e in self.evidence])

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "holds": self.holds,
            "threshold": self.threshold,
            "tolerance": self.tolerance,
            "evidence": [e.to_dict() for e in self.evidence],
            "witness": None if self.witness is None else self.witness.to_dict(),
            "note": self.note,
        }


def _ratio(num: float, den: float) -> float:
    if not math.isfinite(den) or abs(den) <= UNDERFLOW:
        return math.nan
    return num / den


def _verdict(kind: str, evidence: list[Evidence], cfg: OrderCheckConfig, note: str = "") -> OrderVerdict:
    bar = cfg.threshold - cfg.tolerance
    witness = None
    undetermined = False
    for e in evidence:
        for r in (e.min_ratio, e.max_ratio):
            if math.isnan(r):
                undetermined = True
            elif r < bar and witness is None:
                witness = e
    if witness is not None:
        holds = NO
    elif undetermined:
        holds = INDETERMINATE
        note = note or "a ratio denominator underflowed"
    else:
        holds = YES
    return OrderVerdict(kind, holds, cfg.threshold, cfg.tolerance, tuple(evidence), witness, note)


def _weights(length: int, z_grid: Sequence[float]) -> np.ndarray:
    n = np.arange(length)[:, None]
    return np.asarray(z_grid)[None, :] ** (-n)


def _transform(summand: np.ndarray, mask: np.ndarray, w: np.ndarray) -> np.ndarray:
    """``sum_n summand[p, n] * w[n, z]`` over masked indices; shape ``(P, Z)``."""
    terms = np.where(mask, summand, 0.0)[:, :, None] * w[None, :, :]
    return terms.sum(axis=1)


def _grid_compare(
    kind: str,
    cfg: OrderCheckConfig,
    pairs: list[AlphaBetaPair],
    lower: tuple[np.ndarray, np.ndarray, np.ndarray],
    upper: tuple[np.ndarray, np.ndarray, np.ndarray],
    note: str = "",
) -> OrderVerdict:
    """Assemble a verdict from numerator/denominator summands.

    ``lower`` and ``upper`` are ``(num_summand, den_summand, mask)`` triples of
    shape ``(P, L)`` built from lower and upper endpoint sequences.
    """
    length = lower[0].shape[1]
    w = _weights(length, cfg.z_grid)
    num_lo = _transform(lower[0], lower[2], w)
    den_lo = _transform(lower[1], lower[2], w)
    num_hi = _transform(upper[0], upper[2], w)
    den_hi = _transform(upper[1], upper[2], w)
    evidence = []
    for j, z in enumerate(cfg.z_grid):
        p_min = int(np.argmin(num_lo[:, j]))
        a, b = float(num_lo[p_min, j]), float(np.min(den_lo[:, j]))
        c, d = float(np.max(num_hi[:, j])), float(np.max(den_hi[:, j]))
        evidence.append(
            Evidence(
                float(z),
                pairs[p_min].alpha,
                pairs[p_min].beta,
                _ratio(a, b),
                _ratio(c, d),
                (a, b),
                (c, d),
            )
        )
    return _verdict(kind, evidence, cfg, note)


def _length(*dists: LifetimeDistribution) -> int:
    return max(d.pmf.size for d in dists)


def _config(cfg: OrderCheckConfig | None) -> OrderCheckConfig:
    return OrderCheckConfig() if cfg is None else cfg


def _endpoints(dists, pairs, length):
    return [d.endpoint_sequences(pairs, length) for d in dists]


def _two_sided(build, dists, cfg, kind, note=""):
    """Run ``build(seqs) -> (num, den, mask)`` on lower then upper endpoints."""
    pairs = cfg.pairs
    length = _length(*dists)
    seqs = _endpoints(dists, pairs, length)
    lower = build([s[0] for s in seqs])
    upper = build([s[1] for s in seqs])
    return _grid_compare(kind, cfg, pairs, lower, upper, note)


# -- comparators ------------------------------------------------------------


def expectation_order(X: LifetimeDistribution, Y: LifetimeDistribution, cfg: OrderCheckConfig | None = None) -> OrderVerdict:
    """Ratio of transformed pmfs, X over Y."""
    cfg = _config(cfg)

    def build(seqs):
        fx, fy = seqs
        return fx, fy, np.ones_like(fx, dtype=bool)

    return _two_sided(build, (X, Y), cfg, "expectation")


def hazard_rate_order(X: LifetimeDistribution, Y: LifetimeDistribution, cfg: OrderCheckConfig | None = None) -> OrderVerdict:
    """Ratio of transformed hazards, X over Y, on indices where both
    survivals exceed the tolerance."""
    cfg = _config(cfg)

    def build(seqs):
        hx, hy = (_hazard(s, cfg.tolerance) for s in seqs)
        mask = np.isfinite(hx) & np.isfinite(hy)
        return hx, hy, mask

    return _two_sided(build, (X, Y), cfg, "hazard")


def mrl_order(X: LifetimeDistribution, Y: LifetimeDistribution, cfg: OrderCheckConfig | None = None) -> OrderVerdict:
    """Ratio of transformed mean residual lives, X over Y."""
    cfg = _config(cfg)

    def build(seqs):
        mx, my = (_mrl(s, cfg.tolerance) for s in seqs)
        mask = np.isfinite(mx) & np.isfinite(my)
        return mx, my, mask

    return _two_sided(build, (X, Y), cfg, "mrl")


def _relative(kind, func, X1, X2, Y1, Y2, cfg):
    cfg = _config(cfg)

    def build(seqs):
        vals = [func(s, cfg.tolerance) for s in seqs]
        mask = np.ones_like(vals[0], dtype=bool)
        for v in vals:
            mask &= np.isfinite(v) & (v > cfg.tolerance)
        with np.errstate(invalid="ignore", divide="ignore"):
            num = np.where(mask, vals[0] / np.where(mask, vals[1], 1.0), 0.0)
            den = np.where(mask, vals[2] / np.where(mask, vals[3], 1.0), 0.0)
        return num, den, mask

    pairs = cfg.pairs
    length = _length(X1, X2, Y1, Y2)
    seqs = _endpoints((X1, X2, Y1, Y2), pairs, length)
    lower = build([s[0] for s in seqs])
    upper = build([s[1] for s in seqs])
    if not (lower[2].any() or upper[2].any()):
        raise EmptyCommonSupport(f"{kind}: no index where all four {func.__name__[1:]} values exceed tolerance")
    return _grid_compare(kind, cfg, pairs, lower, upper)


def relative_hazard_order(X1, X2, Y1, Y2, cfg: OrderCheckConfig | None = None) -> OrderVerdict:
    """``sum (h_X1/h_X2) z^-n`` over ``sum (h_Y1/h_Y2) z^-n``."""
    return _relative("relative-hazard", _hazard, X1, X2, Y1, Y2, cfg)


def relative_mrl_order(X1, X2, Y1, Y2, cfg: OrderCheckConfig | None = None) -> OrderVerdict:
    """``sum (m_X1/m_X2) z^-n`` over ``sum (m_Y1/m_Y2) z^-n``."""
    return _relative("relative-mrl", _mrl, X1, X2, Y1, Y2, cfg)


def _common_support(X: LifetimeDistribution, Y: LifetimeDistribution) -> np.ndarray:
    length = _length(X, Y)
    common = np.flatnonzero((X.padded(length) > 0) & (Y.padded(length) > 0))
    if common.size == 0:
        raise EmptyCommonSupport(f"{X!r} and {Y!r} have disjoint supports")
    return common


def likelihood_ratio_order(X: LifetimeDistribution, Y: LifetimeDistribution, cfg: OrderCheckConfig | None = None) -> OrderVerdict:
    """Cross-product comparison at adjacent ages ``x = n``, ``y = n + 1``::

        sum f_X(n) f_Y(n+1) z^-n  /  sum f_Y(n) f_X(n+1) z^-n

    Holding at threshold 1 mirrors the classical condition that ``f_Y/f_X``
    increases.
    """
    cfg = _config(cfg)
    _common_support(X, Y)

    def build(seqs):
        fx, fy = seqs
        num = np.zeros_like(fx)
        den = np.zeros_like(fx)
        num[:, :-1] = fx[:, :-1] * fy[:, 1:]
        den[:, :-1] = fy[:, :-1] * fx[:, 1:]
        return num, den, np.ones_like(fx, dtype=bool)

    return _two_sided(build, (X, Y), cfg, "likelihood-ratio")


def aging_intensity_order(
    X: LifetimeDistribution,
    Y: LifetimeDistribution,
    cfg: OrderCheckConfig | None = None,
    x_limit: int | None = None,
    y_limit: int | None = None,
) -> OrderVerdict:
    """Prefix mass of ``f_X(n) f_Y(n) z^-n`` up to ``x_limit`` over the prefix
    up to ``y_limit``.  Both limits default to the common ``N_max``."""
    cfg = _config(cfg)
    top = min(X.n_max, Y.n_max)
    x_limit = top if x_limit is None else int(x_limit)
    y_limit = top if y_limit is None else int(y_limit)
    if not 0 <= x_limit <= y_limit <= top:
        raise InputError(f"need 0 <= x_limit ({x_limit}) <= y_limit ({y_limit}) <= common N_max ({top})")

    def build(seqs):
        fx, fy = seqs
        prod = fx * fy
        n = np.arange(prod.shape[1])
        num = np.where(n <= x_limit, prod, 0.0)
        den = np.where(n <= y_limit, prod, 0.0)
        return num, den, np.ones_like(prod, dtype=bool)

    return _two_sided(build, (X, Y), cfg, "aging-intensity", note=f"x_limit={x_limit}, y_limit={y_limit}")


def integrated_transform(dist: LifetimeDistribution, z_lo: float, z_hi: float, tol: float = 1e-10) -> float:
    """``integral_{z_lo}^{z_hi} sum_n f(n) z^-n dz`` by adaptive Simpson."""
    z_lo, z_hi = float(z_lo), float(z_hi)
    if not 1.0 < z_lo < z_hi:
        raise InputError(f"need 1 < z_lo < z_hi, got [{z_lo}, {z_hi}]")
    coeffs = dist.pmf

    def f(z: float) -> float:
        return float(np.polynomial.polynomial.polyval(1.0 / z, coeffs))

    return adaptive_simpson(f, z_lo, z_hi, tol)


def integrated_dominance(
    X: LifetimeDistribution,
    Y: LifetimeDistribution,
    z_lo: float,
    z_hi: float,
    tolerance: float = 1e-9,
) -> OrderVerdict:
    """Holds when X's integrated transform is at least Y's (minus tolerance)."""
    ix = integrated_transform(X, z_lo, z_hi)
    iy = integrated_transform(Y, z_lo, z_hi)
    r = _ratio(ix, iy)
    e = Evidence(None, None, None, r, r, (ix, iy), (ix, iy))
    holds = YES if ix >= iy - tolerance else NO
    return OrderVerdict(
        "integrated",
        holds,
        1.0,
        tolerance,
        (e,),
        None if holds == YES else e,
        f"z in [{z_lo:g}, {z_hi:g}]",
    )


ORDER_KINDS = (
    "expectation",
    "hazard",
    "relative-hazard",
    "likelihood-ratio",
    "mrl",
    "relative-mrl",
    "aging-intensity",
    "integrated",
)


# -- classical orders (brute-force oracle) ----------------------------------


@dataclass(frozen=True)
class ClassicalRelation:
    """``x_le_y`` means X is smaller than Y in this order."""

    x_le_y: bool
    y_le_x: bool

    @property
    def state(self) -> str:
        if self.x_le_y and self.y_le_x:
            return "equal"
        if self.x_le_y:
            return "x_smaller"
        if self.y_le_x:
            return "y_smaller"
        return "indeterminate"


@dataclass(frozen=True)
class ClassicalOrderReport:
    st: ClassicalRelation
    hr: ClassicalRelation
    lr: ClassicalRelation

    def to_dict(self) -> dict:
        return {name: getattr(self, name).state for name in ("st", "hr", "lr")}


def _all_le(a: np.ndarray, b: np.ndarray, rtol: float) -> bool:
    return bool(np.all(a <= b + rtol * np.maximum(np.abs(a), np.abs(b))))


def classical_orders(X: LifetimeDistribution, Y: LifetimeDistribution, rtol: float = 1e-12) -> ClassicalOrderReport:
    """Textbook usual, hazard-rate and likelihood-ratio orders by exhaustive
    pairwise comparison.  Fuzzy inputs are projected to their midpoint pmf."""
    length = _length(X, Y) + 1
    fx, fy = X.padded(length), Y.padded(length)
    sx, sy = _survival(fx), _survival(fy)
    st = ClassicalRelation(_all_le(sx, sy, rtol), _all_le(sy, sx, rtol))

    upper = np.triu(np.ones((length, length), dtype=bool))  # t <= u

    def cross(a, b):
        # a(u) b(t) for t <= u, indexed [t, u]
        return np.outer(b, a)

    # X <=hr Y  iff  S_Y(t) S_X(u) <= S_Y(u) S_X(t) for t <= u
    hr_x = _all_le(cross(sx, sy)[upper], cross(sy, sx)[upper], rtol)
    hr_y = _all_le(cross(sy, sx)[upper], cross(sx, sy)[upper], rtol)
    # X <=lr Y  iff  f_X(u) f_Y(t) <= f_X(t) f_Y(u) for t <= u
    lr_x = _all_le(cross(fx, fy)[upper], cross(fy, fx)[upper], rtol)
    lr_y = _all_le(cross(fy, fx)[upper], cross(fx, fy)[upper], rtol)
    return ClassicalOrderReport(st, ClassicalRelation(hr_x, hr_y), ClassicalRelation(lr_x, lr_y))


def require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)
