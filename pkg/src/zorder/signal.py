"""Finite-support discrete signals and sampled continuous signals.

A :class:`DiscreteSignal` stores a contiguous block of amplitudes starting at
an integer index; everything outside the block is zero.  Leading and trailing
zeros are trimmed on construction, so the all-zero signal has no samples and
an empty support.

All transforms here are direct finite sums or trapezoid quadrature; there is
no FFT path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError, ZeroZWithPositiveSupport

__all__ = [
    "DiscreteSignal",
    "SampledContinuousSignal",
    "as_complex",
    "power_sum",
    "eval_z_transform",
    "eval_laplace_transform",
    "shift",
    "scale",
    "time_reverse",
    "add",
    "convolve",
]


def as_complex(value) -> complex:
    """Coerce a number (or ``(re, im)`` pair) to a finite ``complex``."""
    if isinstance(value, (tuple, list)) and len(value) == 2:
        value = complex(float(value[0]), float(value[1]))
    try:
        z = complex(value)
    except (TypeError, ValueError) as exc:
        raise InputError(f"not a complex number: {value!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError(f"complex point must be finite, got {z!r}")
    return z


def power_sum(indices: Iterable[int], values: Iterable[float], z) -> complex | float:
    """Return ``sum(v * z**(-n))`` accumulated in ascending index order.

    Real ``z`` is evaluated in real arithmetic, so crisp and interval code
    paths that share this helper agree bit for bit.
    """
    total = 0.0
    if isinstance(z, complex) and z.imag == 0.0:
        z = z.real
    for n, v in zip(indices, values):
        total += v * z ** (-n)
    return total


@dataclass(frozen=True)
class DiscreteSignal:
    """Finite-support real sequence ``x(n)``.

    ``values[k]`` is the amplitude at index ``start + k``.  Build instances
    through :meth:`from_sequence`, :meth:`from_samples` or :meth:`impulse`;
    the raw constructor also normalizes, so direct use is safe.
    """

    start: int = 0
    values: tuple[float, ...] = ()

    def __post_init__(self):
        vals = [float(v) for v in self.values]
        if not all(math.isfinite(v) for v in vals):
            raise InputError("signal amplitudes must be finite")
        lo, hi = 0, len(vals)
        while lo < hi and vals[lo] == 0.0:
            lo += 1
        while hi > lo and vals[hi - 1] == 0.0:
            hi -= 1
        start = int(self.start) + lo if hi > lo else 0
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "values", tuple(vals[lo:hi]))

    @classmethod
    def from_sequence(cls, values: Sequence[float], start: int = 0) -> DiscreteSignal:
        return cls(int(start), tuple(values))

    @classmethod
    def from_samples(cls, samples: Mapping[int, float]) -> DiscreteSignal:
        if not samples:
            return cls()
        keys = [int(k) for k in samples]
        lo, hi = min(keys), max(keys)
        block = [0.0] * (hi - lo + 1)
        for k, v in samples.items():
            block[int(k) - lo] = float(v)
        return cls(lo, tuple(block))

    @classmethod
    def impulse(cls, at: int = 0, amplitude: float = 1.0) -> DiscreteSignal:
        return cls(at, (amplitude,))

    @classmethod
    def zero(cls) -> DiscreteSignal:
        return cls()

    @property
    def is_zero(self) -> bool:
        return not self.values

    @property
    def support_min(self) -> int | None:
        return None if self.is_zero else self.start

    @property
    def support_max(self) -> int | None:
        return None if self.is_zero else self.start + len(self.values) - 1

    @property
    def indices(self) -> range:
        return range(self.start, self.start + len(self.values))

    @property
    def samples(self) -> dict[int, float]:
        """Nonzero samples as an ordered ``{index: amplitude}`` mapping."""
        return {n: v for n, v in zip(self.indices, self.values) if v != 0.0}

    def __call__(self, n: int) -> float:
        k = n - self.start
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0.0

    def to_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


@dataclass(frozen=True)
class SampledContinuousSignal:
    """Samples of a continuous-time signal on a strictly increasing grid."""

    times: tuple[float, ...]
    amplitudes: tuple[float, ...]

    def __post_init__(self):
        t = tuple(float(v) for v in self.times)
        x = tuple(float(v) for v in self.amplitudes)
        if len(t) != len(x):
            raise InputError(f"times ({len(t)}) and amplitudes ({len(x)}) differ in length")
        if len(t) < 2:
            raise InputError("a sampled continuous signal needs at least 2 samples")
        if not all(math.isfinite(v) for v in t + x):
            raise InputError("sample times and amplitudes must be finite")
        if any(b <= a for a, b in zip(t, t[1:])):
            raise InputError("sample times must be strictly increasing")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "amplitudes", x)

    @classmethod
    def from_function(cls, func, t0: float, t1: float, count: int) -> SampledContinuousSignal:
        t = np.linspace(t0, t1, count)
        return cls(tuple(t), tuple(func(t)))


def eval_z_transform(signal: DiscreteSignal, z) -> complex:
    """Evaluate ``sum x(n) z**(-n)`` over the finite support."""
    z = as_complex(z)
    if signal.is_zero:
        return 0j
    if z == 0:
        if any(v != 0.0 for n, v in zip(signal.indices, signal.values) if n > 0):
            raise ZeroZWithPositiveSupport(
                "z = 0 is outside the region of convergence of a signal "
                "with nonzero samples at positive indices"
            )
        # negative indices contribute 0**|n| = 0
        return complex(signal(0))
    return complex(power_sum(signal.indices, signal.values, z))


def eval_laplace_transform(signal: SampledContinuousSignal, s) -> complex:
    """Trapezoid quadrature of ``exp(-s t) x(t)`` on the signal's own grid."""
    s = as_complex(s)
    t = np.asarray(signal.times)
    x = np.asarray(signal.amplitudes)
    integrand = np.exp(-s * t) * x
    return complex(np.trapezoid(integrand, t))


def shift(signal: DiscreteSignal, k: int) -> DiscreteSignal:
    """Delay by ``k`` samples: ``y(n) = x(n - k)``."""
    if signal.is_zero:
        return signal
    return DiscreteSignal(signal.start + int(k), signal.values)


def scale(signal: DiscreteSignal, alpha: float) -> DiscreteSignal:
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise InputError("scale factor must be finite")
    return DiscreteSignal(signal.start, tuple(alpha * v for v in signal.values))


def time_reverse(signal: DiscreteSignal) -> DiscreteSignal:
    """``y(n) = x(-n)``."""
    if signal.is_zero:
        return signal
    return DiscreteSignal(-signal.support_max, tuple(reversed(signal.values)))


def add(a: DiscreteSignal, b: DiscreteSignal) -> DiscreteSignal:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    lo = min(a.start, b.start)
    hi = max(a.support_max, b.support_max)
    return DiscreteSignal(lo, tuple(a(n) + b(n) for n in range(lo, hi + 1)))


def convolve(a: DiscreteSignal, b: DiscreteSignal) -> DiscreteSignal:
    """Linear convolution ``y(n) = sum_k a(k) b(n - k)``."""
    if a.is_zero or b.is_zero:
        return DiscreteSignal()
    out = np.convolve(a.to_array(), b.to_array())
    return DiscreteSignal(a.start + b.start, tuple(out))

