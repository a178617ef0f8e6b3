"""Rational transfer functions in powers of ``z**-1``.

``H(z) = (b0 + b1 z^-1 + ... + bM z^-M) / (1 + a1 z^-1 + ... + aN z^-N)``

Every transform carries the causal region of convergence ``|z| > roc_radius``
with ``roc_radius`` the largest pole magnitude.  Products and sums never
cancel common factors; when a zero lands within ``CANCELLATION_DISTANCE`` of a
pole the result is flagged instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    InputError,
    NearPoleEvaluation,
    OutsideROC,
    RootFindingDivergence,
    UnitCircleOutsideROC,
)
from .signal import DiscreteSignal, as_complex

__all__ = [
    "Root",
    "PoleZeroSet",
    "RationalTransform",
    "polynomial_roots",
    "from_geometric",
    "evaluate",
    "poles_zeros",
    "is_stable",
    "frequency_response",
    "freqresp_table",
    "inverse_power_series",
    "multiply",
    "add",
    "scale",
]

STABILITY_MARGIN = 1e-9
NEAR_POLE = 1e-12
CANCELLATION_DISTANCE = 1e-8
ROOT_RESIDUAL = 1e-10
CLUSTER_DISTANCE = 1e-6
DK_MAX_ITER = 500


# -- root finding -----------------------------------------------------------


def _relative_residual(coeffs: np.ndarray, root: complex) -> float:
    """``|p(r)| / sum |c_k| |r|^k`` for ``coeffs`` in descending powers."""
    value = 0j
    scale_ = 0.0
    mag = abs(root)
    for c in coeffs:
        value = value * root + c
        scale_ = scale_ * mag + abs(c)
    return abs(value) / scale_ if scale_ > 0 else abs(value)


def _companion_roots(coeffs: np.ndarray) -> np.ndarray:
    monic = coeffs[1:] / coeffs[0]
    n = monic.size
    comp = np.zeros((n, n))
    comp[0, :] = -monic
    if n > 1:
        comp[np.arange(1, n), np.arange(n - 1)] = 1.0
    return np.linalg.eigvals(comp)


def _durand_kerner(coeffs: np.ndarray, max_iter: int = DK_MAX_ITER, tol: float = 1e-14) -> np.ndarray:
    monic = coeffs / coeffs[0]
    n = monic.size - 1
    radius = 1.0 + float(np.max(np.abs(monic[1:])))
    roots = radius * (0.4 + 0.9j) ** np.arange(n)
    for _ in range(max_iter):
        previous = roots.copy()
        for i in range(n):
            others = np.delete(roots, i)
            denom = np.prod(roots[i] - others)
            if denom == 0:
                denom = 1e-300
            roots[i] = roots[i] - np.polyval(monic, roots[i]) / denom
        if np.max(np.abs(roots - previous)) <= tol * max(1.0, float(np.max(np.abs(roots)))):
            return roots
    raise RootFindingDivergence(f"Durand-Kerner did not converge in {max_iter} iterations")


def _cluster(roots: np.ndarray) -> list[tuple[complex, int]]:
    remaining = sorted((complex(r) for r in roots), key=lambda r: (r.real, r.imag))
    clusters: list[list[complex]] = []
    for r in remaining:
        for group in clusters:
            centre = sum(group) / len(group)
            if abs(r - centre) <= CLUSTER_DISTANCE * max(1.0, abs(centre)):
                group.append(r)
                break
        else:
            clusters.append([r])
    out = []
    for group in clusters:
        centre = sum(group) / len(group)
        if abs(centre.imag) <= 1e-12 * max(1.0, abs(centre)):
            centre = complex(centre.real, 0.0)
        out.append((centre, len(group)))
    return out


def polynomial_roots(coeffs: Sequence[float]) -> np.ndarray:
    """Roots of ``c0 x^n + ... + cn`` (descending powers).

    Companion-matrix eigenvalues are accepted when every root has relative
    residual at most ``ROOT_RESIDUAL``; otherwise Durand-Kerner is tried and
    must meet the same bound.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
    if c.size <= 1:
        return np.zeros(0, dtype=complex)
    roots = _companion_roots(c)
    if all(_relative_residual(c, r) <= ROOT_RESIDUAL for r in roots):
        return roots
    roots = _durand_kerner(c)
    if not all(_relative_residual(c, r) <= ROOT_RESIDUAL for r in roots):
        raise RootFindingDivergence("root residual above tolerance after Durand-Kerner fallback")
    return roots


# -- types ------------------------------------------------------------------


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int = 1

    def to_dict(self) -> dict:
        return {"re": self.value.real, "im": self.value.imag, "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class PoleZeroSet:
    """Zeros and poles of ``H`` as a function of ``z``.

    Degree mismatch between numerator and denominator shows up as an explicit
    root at the origin.  Leading zero numerator coefficients (pure delays)
    become ``zeros_at_infinity``.
    """

    zeros: tuple[Root, ...]
    poles: tuple[Root, ...]
    zeros_at_infinity: int = 0

    @property
    def zero_count(self) -> int:
        return sum(r.multiplicity for r in self.zeros)

    @property
    def pole_count(self) -> int:
        return sum(r.multiplicity for r in self.poles)

    def pole_values(self) -> list[complex]:
        return [r.value for r in self.poles for _ in range(r.multiplicity)]

    def zero_values(self) -> list[complex]:
        return [r.value for r in self.zeros for _ in range(r.multiplicity)]

    def to_dict(self) -> dict:
        return {
            "zeros": [r.to_dict() for r in self.zeros],
            "poles": [r.to_dict() for r in self.poles],
            "zeros_at_infinity": self.zeros_at_infinity,
        }


def _trim_trailing(coeffs: Sequence[float]) -> tuple[float, ...]:
    c = [float(v) for v in coeffs]
    while len(c) > 1 and c[-1] == 0.0:
        c.pop()
    return tuple(c) if c else (0.0,)


@dataclass(frozen=True)
class RationalTransform:
    """``num(z^-1) / den(z^-1)`` with ``den[0] == 1`` after normalization."""

    num: tuple[float, ...]
    den: tuple[float, ...] = (1.0,)
    near_cancellation: bool = False
    roc_radius: float = field(init=False)

    def __post_init__(self):
        num = [float(v) for v in self.num] or [0.0]
        den = [float(v) for v in self.den]
        if not den:
            raise InputError("denominator needs at least one coefficient")
        if not all(math.isfinite(v) for v in num + den):
            raise InputError("transfer function coefficients must be finite")
        if den[0] == 0.0:
            raise InputError("leading denominator coefficient a0 must be nonzero")
        a0 = den[0]
        num = _trim_trailing([v / a0 for v in num])
        den = _trim_trailing([v / a0 for v in den])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        poles = polynomial_roots(den)
        radius = float(np.max(np.abs(poles))) if poles.size else 0.0
        object.__setattr__(self, "roc_radius", radius)

    @classmethod
    def constant(cls, gain: float = 1.0) -> RationalTransform:
        return cls((gain,), (1.0,))

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    @property
    def is_zero(self) -> bool:
        return all(v == 0.0 for v in self.num)

    def to_dict(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_dict(cls, data: dict) -> RationalTransform:
        try:
            return cls(tuple(data["num"]), tuple(data.get("den", [1.0])))
        except KeyError as exc:
            raise InputError(f"rational transform JSON is missing field {exc.args[0]!r}") from None
        except TypeError as exc:
            raise InputError(f"rational transform JSON has malformed coefficients: {exc}") from None


# -- operations -------------------------------------------------------------


def from_geometric(a: float) -> RationalTransform:
    """Closed form of ``n -> a**n`` (n >= 0): ``1 / (1 - a z^-1) = z / (z - a)``."""
    a = float(a)
    if not math.isfinite(a):
        raise InputError("geometric ratio must be finite")
    return RationalTransform((1.0,), (1.0, -a))


def _poly_inv(coeffs: Sequence[float], w: complex) -> complex:
    """Evaluate ``sum c_k w**k`` by Horner's rule."""
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * w + c
    return acc


def evaluate(rt: RationalTransform, z) -> complex:
    z = as_complex(z)
    if abs(z) <= rt.roc_radius or z == 0:
        raise OutsideROC(f"|z| = {abs(z):.17g} is not inside the ROC |z| > {rt.roc_radius:.17g}")
    w = 1.0 / z
    den = _poly_inv(rt.den, w)
    if abs(den) < NEAR_POLE:
        raise NearPoleEvaluation(f"denominator magnitude {abs(den):.3g} at z = {z}")
    return _poly_inv(rt.num, w) / den


def poles_zeros(rt: RationalTransform) -> PoleZeroSet:
    """Roots of ``H`` in the z-plane.

    Multiplying numerator and denominator by ``z**max(M, N)`` turns the
    ``z^-1`` coefficient lists into ordinary descending-power polynomials in
    ``z``; the leftover power ``z**(N - M)`` is the origin root.
    """
    m, n = rt.num_degree, rt.den_degree
    zeros: list[Root] = []
    poles: list[Root] = []
    leading_zero_terms = 0
    if not rt.is_zero:
        num = np.asarray(rt.num)
        leading_zero_terms = int(np.argmax(num != 0.0))
        zeros = [Root(v, k) for v, k in _cluster(polynomial_roots(num))]
    poles = [Root(v, k) for v, k in _cluster(polynomial_roots(rt.den))]
    if n > m and not rt.is_zero:
        zeros.append(Root(0j, n - m))
    elif m > n:
        poles.append(Root(0j, m - n))
    return PoleZeroSet(tuple(zeros), tuple(poles), leading_zero_terms)


def is_stable(rt: RationalTransform) -> bool:
    """BIBO stability of the causal system: all poles inside the unit circle."""
    return all(abs(p) < 1.0 - STABILITY_MARGIN for p in poles_zeros(rt).pole_values())


def frequency_response(rt: RationalTransform, omega: float) -> complex:
    if rt.roc_radius >= 1.0:
        raise UnitCircleOutsideROC(
            f"ROC |z| > {rt.roc_radius:.17g} does not contain the unit circle"
        )
    return evaluate(rt, cmath.exp(1j * float(omega)))


def freqresp_table(rt: RationalTransform, n_points: int) -> list[tuple[float, float, float]]:
    """Rows ``(omega, magnitude, phase)`` on ``n_points`` uniform frequencies in ``[0, pi]``."""
    if n_points < 2:
        raise InputError("frequency table needs at least 2 points")
    rows = []
    for omega in np.linspace(0.0, math.pi, n_points):
        h = frequency_response(rt, omega)
        rows.append((float(omega), abs(h), cmath.phase(h)))
    return rows


def inverse_power_series(rt: RationalTransform, count: int) -> DiscreteSignal:
    """First ``count`` samples of the causal inverse, by long division.

    ``x[n] = b[n] - sum_{k=1..min(n,N)} a[k] x[n-k]`` since ``a0 == 1``.
    """
    if count < 1:
        raise InputError("count must be at least 1")
    b, a = rt.num, rt.den
    x = [0.0] * count
    for i in range(count):
        acc = b[i] if i < len(b) else 0.0
        for k in range(1, min(i, len(a) - 1) + 1):
            acc -= a[k] * x[i - k]
        x[i] = acc
    return DiscreteSignal(0, tuple(x))


def _has_near_cancellation(num: Sequence[float], den: Sequence[float]) -> bool:
    if all(v == 0.0 for v in num):
        return False
    zs = polynomial_roots(num)
    ps = polynomial_roots(den)
    return any(abs(z - p) < CANCELLATION_DISTANCE for z in zs for p in ps)


def multiply(a: RationalTransform, b: RationalTransform) -> RationalTransform:
    num = np.convolve(a.num, b.num)
    den = np.convolve(a.den, b.den)
    return RationalTransform(tuple(num), tuple(den), _has_near_cancellation(num, den))


def _pad_add(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    out = np.zeros(max(p.size, q.size))
    out[: p.size] += p
    out[: q.size] += q
    return out


def add(a: RationalTransform, b: RationalTransform) -> RationalTransform:
    """``a + b`` over the common denominator ``den_a * den_b``."""
    num = _pad_add(np.convolve(a.num, b.den), np.convolve(b.num, a.den))
    den = np.convolve(a.den, b.den)
    return RationalTransform(tuple(num), tuple(den), _has_near_cancellation(num, den))


def scale(rt: RationalTransform, gain: float) -> RationalTransform:
    return RationalTransform(tuple(float(gain) * v for v in rt.num), rt.den, rt.near_cancellation)
