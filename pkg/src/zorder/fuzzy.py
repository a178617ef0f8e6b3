"""Alpha-cut fuzzy numbers, interval arithmetic and the fuzzy Z-transform.

A fuzzy number is stored as a finite family of nested closed intervals, one
per membership level, with linear interpolation between stored levels.  A
pair ``(alpha, beta)`` with ``alpha <= beta`` selects the interval
``[L(alpha), U(beta)]``: lower endpoint at level ``alpha``, upper endpoint at
level ``beta``.

The fuzzy transform is only defined for real ``z > 0``.  There every weight
``z**-n`` is positive, so the image of a box of sample values is the interval
spanned by the endpoint sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError, NonpositiveZ
from .signal import DiscreteSignal, power_sum

__all__ = [
    "DEFAULT_LEVELS",
    "Interval",
    "AlphaBetaPair",
    "FuzzyNumber",
    "FuzzySignal",
    "LaurentCoefficients",
    "alpha_beta_pairs",
    "cut",
    "interval_add",
    "interval_scale",
    "fuzzy_z_transform",
    "finite_sequence_transform",
    "min_over_pairs",
    "max_over_pairs",
]

DEFAULT_LEVELS = (0.0, 0.25, 0.5, 0.75, 1.0)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InputError(f"interval endpoints must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise InputError(f"interval lower endpoint {lo} exceeds upper endpoint {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: float) -> Interval:
        return cls(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= value <= self.hi + tol

    def issubset(self, other: Interval, tol: float = 0.0) -> bool:
        return other.lo - tol <= self.lo and self.hi <= other.hi + tol

    def __add__(self, other: Interval) -> Interval:
        return interval_add(self, other)

    def __iter__(self):
        yield self.lo
        yield self.hi


def interval_add(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo + b.lo, a.hi + b.hi)


def interval_scale(a: Interval, c: float) -> Interval:
    if c >= 0:
        return Interval(c * a.lo, c * a.hi)
    return Interval(c * a.hi, c * a.lo)


@dataclass(frozen=True, order=True)
class AlphaBetaPair:
    alpha: float
    beta: float

    def __post_init__(self):
        a, b = float(self.alpha), float(self.beta)
        if not 0.0 <= a <= b <= 1.0:
            raise InputError(f"need 0 <= alpha <= beta <= 1, got alpha={a}, beta={b}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)


def alpha_beta_pairs(levels: Iterable[float]) -> list[AlphaBetaPair]:
    """All grid pairs ``(a, b)`` with ``a <= b``, sorted."""
    grid = sorted(set(float(v) for v in levels))
    if not grid:
        raise InputError("alpha grid must be nonempty")
    return [AlphaBetaPair(a, b) for a in grid for b in grid if a <= b]


@dataclass(frozen=True)
class FuzzyNumber:
    """Nested alpha-cuts on levels ``0 = a0 < ... < aK = 1``."""

    levels: tuple[float, ...]
    cuts: tuple[Interval, ...]

    def __post_init__(self):
        levels = tuple(float(v) for v in self.levels)
        cuts = tuple(c if isinstance(c, Interval) else Interval(*c) for c in self.cuts)
        if len(levels) < 2:
            raise InputError("a fuzzy number needs at least 2 levels")
        if len(levels) != len(cuts):
            raise InputError(f"{len(levels)} levels but {len(cuts)} cuts")
        if levels[0] != 0.0 or levels[-1] != 1.0:
            raise InputError("levels must start at 0 and end at 1")
        for a, b in zip(levels, levels[1:]):
            if b <= a:
                raise InputError(f"levels must be strictly ascending (level {b} after {a})")
        for k in range(1, len(cuts)):
            if not cuts[k].issubset(cuts[k - 1]):
                raise InputError(
                    f"cut at level {levels[k]} [{cuts[k].lo}, {cuts[k].hi}] is not nested in "
                    f"cut at level {levels[k - 1]} [{cuts[k - 1].lo}, {cuts[k - 1].hi}]"
                )
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "cuts", cuts)

    @classmethod
    def crisp(cls, value: float, levels: Sequence[float] = DEFAULT_LEVELS) -> FuzzyNumber:
        return cls(tuple(levels), tuple(Interval.point(value) for _ in levels))

    @classmethod
    def triangular(
        cls, left: float, mode: float, right: float, levels: Sequence[float] = DEFAULT_LEVELS
    ) -> FuzzyNumber:
        # clamp against the mode so rounding cannot invert a cut
        cuts = tuple(
            Interval(min(left + a * (mode - left), mode), max(right - a * (right - mode), mode)) for a in levels
        )
        return cls(tuple(levels), cuts)

    @property
    def is_crisp(self) -> bool:
        first = self.cuts[0]
        return first.lo == first.hi

    @property
    def core(self) -> Interval:
        return self.cuts[-1]

    def lower(self, alpha: float) -> float:
        return float(np.interp(alpha, self.levels, [c.lo for c in self.cuts]))

    def upper(self, beta: float) -> float:
        return float(np.interp(beta, self.levels, [c.hi for c in self.cuts]))

    def to_dict(self, n: int | None = None) -> dict:
        out = {} if n is None else {"n": n}
        out["levels"] = list(self.levels)
        out["cuts"] = [[c.lo, c.hi] for c in self.cuts]
        return out


def cut(fn: FuzzyNumber, pair: AlphaBetaPair) -> Interval:
    return Interval(fn.lower(pair.alpha), fn.upper(pair.beta))


@dataclass(frozen=True)
class FuzzySignal:
    """Finite-support sequence of fuzzy numbers, indices ascending."""

    samples: tuple[tuple[int, FuzzyNumber], ...] = ()

    def __post_init__(self):
        items = [(int(n), fn) for n, fn in self.samples]
        items.sort(key=lambda item: item[0])
        for (a, _), (b, _) in zip(items, items[1:]):
            if a == b:
                raise InputError(f"duplicate sample index {a}")
        object.__setattr__(self, "samples", tuple(items))

    @classmethod
    def from_mapping(cls, samples: Mapping[int, FuzzyNumber]) -> FuzzySignal:
        return cls(tuple(samples.items()))

    @classmethod
    def from_crisp(cls, signal: DiscreteSignal, levels: Sequence[float] = DEFAULT_LEVELS) -> FuzzySignal:
        return cls(tuple((n, FuzzyNumber.crisp(v, levels)) for n, v in signal.samples.items()))

    @property
    def indices(self) -> list[int]:
        return [n for n, _ in self.samples]

    @property
    def is_crisp(self) -> bool:
        return all(fn.is_crisp for _, fn in self.samples)

    def crisp_core(self) -> DiscreteSignal:
        """Midpoints of the level-1 cuts as a crisp signal."""
        return DiscreteSignal.from_samples({n: fn.core.midpoint for n, fn in self.samples})

    def cuts_at(self, pair: AlphaBetaPair) -> list[Interval]:
        return [cut(fn, pair) for _, fn in self.samples]


@dataclass(frozen=True)
class LaurentCoefficients:
    """Coefficients of ``z**-n`` for ``n = first_index, first_index + 1, ...``."""

    first_index: int
    coefficients: tuple

    def powers(self) -> list[int]:
        return [-(self.first_index + k) for k in range(len(self.coefficients))]


def fuzzy_z_transform(fs: FuzzySignal, pair: AlphaBetaPair, z: float) -> Interval:
    """``[sum L_n(alpha) z^-n, sum U_n(beta) z^-n]`` for real ``z > 0``."""
    if isinstance(z, complex):
        if z.imag != 0.0:
            raise NonpositiveZ(f"fuzzy transform needs real z > 0, got {z}")
        z = z.real
    z = float(z)
    if not (math.isfinite(z) and z > 0.0):
        raise NonpositiveZ(f"fuzzy transform needs real z > 0, got {z}")
    cuts = fs.cuts_at(pair)
    idx = fs.indices
    return Interval(power_sum(idx, [c.lo for c in cuts], z), power_sum(idx, [c.hi for c in cuts], z))


def finite_sequence_transform(
    signal: DiscreteSignal | FuzzySignal, pair: AlphaBetaPair | None = None
) -> LaurentCoefficients:
    """Coefficient list of the finite transform ``sum x(n) z^-n``.

    Crisp input (including a fuzzy signal whose cuts are all degenerate)
    gives plain floats.  Otherwise each coefficient is the interval selected
    by ``pair``; the default ``(0, 0)`` selects the widest cut.
    """
    if isinstance(signal, FuzzySignal):
        if not signal.samples:
            return LaurentCoefficients(0, ())
        if signal.is_crisp:
            signal = DiscreteSignal.from_samples({n: fn.core.lo for n, fn in signal.samples})
        else:
            pair = pair or AlphaBetaPair(0.0, 0.0)
            lookup = dict(zip(signal.indices, signal.cuts_at(pair)))
            lo, hi = signal.indices[0], signal.indices[-1]
            coeffs = tuple(lookup.get(n, Interval.point(0.0)) for n in range(lo, hi + 1))
            return LaurentCoefficients(lo, coeffs)
    if signal.is_zero:
        return LaurentCoefficients(0, ())
    return LaurentCoefficients(signal.start, tuple(signal.values))


def _grid_values(f: Callable[[AlphaBetaPair], float], grid: Iterable[float]) -> list[float]:
    pairs = alpha_beta_pairs(grid)
    return [float(f(p)) for p in pairs]


def min_over_pairs(f: Callable[[AlphaBetaPair], float], grid: Iterable[float] = DEFAULT_LEVELS) -> float:
    """Smallest value of ``f`` over grid pairs with ``alpha <= beta``."""
    return min(_grid_values(f, grid))


def max_over_pairs(f: Callable[[AlphaBetaPair], float], grid: Iterable[float] = DEFAULT_LEVELS) -> float:
    return max(_grid_values(f, grid))
