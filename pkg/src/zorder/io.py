"""File formats: CSV signals, JSON transfer functions, fuzzy signals,
distributions and reports.

Every reader raises :class:`~zorder.errors.InputError` with a message that
names the file and the offending row or field.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Iterable

from .errors import InputError
from .fuzzy import FuzzyNumber, FuzzySignal
from .orders import LifetimeDistribution
from .rational import RationalTransform
from .signal import DiscreteSignal, SampledContinuousSignal

__all__ = [
    "dumps",
    "to_jsonable",
    "parse_signal_csv",
    "read_signal_csv",
    "signal_to_csv",
    "parse_continuous_csv",
    "read_continuous_csv",
    "read_json",
    "rational_from_json",
    "fuzzy_number_from_dict",
    "fuzzy_signal_from_dict",
    "fuzzy_signal_to_dict",
    "distribution_from_dict",
    "parse_distribution",
    "rows_to_csv",
]


# -- JSON --------------------------------------------------------------------


def to_jsonable(obj: Any) -> Any:
    """Recursively convert to JSON-ready values; non-finite floats become None
    and complex numbers become ``{"re", "im"}``."""
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, complex):
        return {"re": to_jsonable(obj.real), "im": to_jsonable(obj.imag)}
    if isinstance(obj, int):
        return obj
    if getattr(obj, "ndim", 0) > 0:
        return to_jsonable(obj.tolist())
    if hasattr(obj, "item"):  # numpy scalar
        return to_jsonable(obj.item())
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Deterministic JSON text.  Floats use the shortest repr that round-trips."""
    return json.dumps(to_jsonable(obj), indent=2, allow_nan=False) + "\n"


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


# -- CSV signals -------------------------------------------------------------


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None


def _csv_rows(text: str, header: tuple[str, str], source: str) -> Iterable[tuple[int, str, str]]:
    reader = csv.reader(io.StringIO(text))
    rows = [(i, r) for i, r in enumerate(reader, start=1) if r and any(c.strip() for c in r)]
    if not rows:
        raise InputError(f"{source}: empty file, expected header {','.join(header)}")
    line, first = rows[0]
    if tuple(c.strip() for c in first) != header:
        raise InputError(f"{source}: line {line}: expected header {','.join(header)}, got {','.join(first)}")
    for line, row in rows[1:]:
        if len(row) != 2:
            raise InputError(f"{source}: line {line}: expected 2 columns, got {len(row)}")
        yield line, row[0].strip(), row[1].strip()


def _float(text: str, source: str, line: int, field: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"{source}: line {line}: field {field!r} is not a number: {text!r}") from None
    if not math.isfinite(value):
        raise InputError(f"{source}: line {line}: field {field!r} must be finite, got {text!r}")
    return value


def parse_signal_csv(text: str, source: str = "<csv>") -> DiscreteSignal:
    """Header ``n,amplitude``; indices may be sparse but not repeated."""
    samples: dict[int, float] = {}
    for line, n_text, a_text in _csv_rows(text, ("n", "amplitude"), source):
        try:
            n = int(n_text)
        except ValueError:
            raise InputError(f"{source}: line {line}: field 'n' is not an integer: {n_text!r}") from None
        if n in samples:
            raise InputError(f"{source}: line {line}: duplicate index n={n}")
        samples[n] = _float(a_text, source, line, "amplitude")
    return DiscreteSignal.from_samples(samples)


def read_signal_csv(path: str | Path) -> DiscreteSignal:
    return parse_signal_csv(_read_text(path), str(path))


def signal_to_csv(signal: DiscreteSignal) -> str:
    return rows_to_csv(("n", "amplitude"), sorted(signal.samples.items()))


def parse_continuous_csv(text: str, source: str = "<csv>") -> SampledContinuousSignal:
    times, amps = [], []
    for line, t_text, a_text in _csv_rows(text, ("t", "amplitude"), source):
        times.append(_float(t_text, source, line, "t"))
        amps.append(_float(a_text, source, line, "amplitude"))
    try:
        return SampledContinuousSignal(tuple(times), tuple(amps))
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def read_continuous_csv(path: str | Path) -> SampledContinuousSignal:
    return parse_continuous_csv(_read_text(path), str(path))


def rows_to_csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return out.getvalue()


# -- transfer functions ------------------------------------------------------


def rational_from_json(data: Any, source: str = "<json>") -> RationalTransform:
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected an object with fields 'num' and 'den'")
    for name in ("num", "den"):
        if name in data and not isinstance(data[name], list):
            raise InputError(f"{source}: field {name!r} must be a list of numbers")
    try:
        return RationalTransform.from_dict(data)
    except (InputError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None


# -- fuzzy signals -----------------------------------------------------------


def fuzzy_number_from_dict(data: Any, where: str) -> FuzzyNumber:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object with 'levels' and 'cuts'")
    try:
        levels = data["levels"]
        cuts = data["cuts"]
    except KeyError as exc:
        raise InputError(f"{where}: missing field {exc.args[0]!r}") from None
    if not isinstance(cuts, list) or not all(isinstance(c, list) and len(c) == 2 for c in cuts):
        raise InputError(f"{where}: field 'cuts' must be a list of [lo, hi] pairs")
    try:
        return FuzzyNumber(tuple(levels), tuple(tuple(c) for c in cuts))
    except (InputError, TypeError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from None


def fuzzy_signal_from_dict(data: Any, source: str = "<json>") -> FuzzySignal:
    if not isinstance(data, dict) or not isinstance(data.get("samples"), list):
        raise InputError(f"{source}: expected an object with a 'samples' list")
    items = []
    for k, entry in enumerate(data["samples"]):
        where = f"{source}: samples[{k}]"
        if not isinstance(entry, dict) or "n" not in entry:
            raise InputError(f"{where}: missing field 'n'")
        if not isinstance(entry["n"], int) or isinstance(entry["n"], bool):
            raise InputError(f"{where}: field 'n' must be an integer")
        items.append((entry["n"], fuzzy_number_from_dict(entry, where)))
    try:
        return FuzzySignal(tuple(items))
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def fuzzy_signal_to_dict(fs: FuzzySignal) -> dict:
    return {"samples": [fn.to_dict(n) for n, fn in fs.samples]}


# -- distributions -----------------------------------------------------------


def distribution_from_dict(data: Any, source: str = "<json>") -> LifetimeDistribution:
    """``{"pmf": [...]}`` or ``{"samples": [...]}`` with ``n = 0..N_max``."""
    if isinstance(data, dict) and "pmf" in data:
        pmf = data["pmf"]
        if not isinstance(pmf, list) or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pmf):
            raise InputError(f"{source}: field 'pmf' must be a list of numbers")
        try:
            return LifetimeDistribution.crisp(pmf, label=source)
        except InputError as exc:
            raise InputError(f"{source}: field 'pmf': {exc}") from None
    if isinstance(data, dict) and "samples" in data:
        fs = fuzzy_signal_from_dict(data, source)
        idx = fs.indices
        if idx != list(range(len(idx))):
            raise InputError(f"{source}: fuzzy pmf samples must cover n = 0..N_max without gaps")
        try:
            return LifetimeDistribution.from_fuzzy([fn for _, fn in fs.samples], label=source)
        except InputError as exc:
            raise InputError(f"{source}: {exc}") from None
    raise InputError(f"{source}: expected a 'pmf' list or a fuzzy 'samples' list")


def parse_distribution(text: str) -> LifetimeDistribution:
    """A distribution file path or the shorthand ``geo:p`` / ``point:n1=w1,n2=w2``."""
    if text.startswith("geo:"):
        try:
            p = float(text[4:])
        except ValueError:
            raise InputError(f"{text!r}: geometric parameter is not a number") from None
        return LifetimeDistribution.geometric(p)
    if text.startswith("point:"):
        masses: dict[int, float] = {}
        for part in text[6:].split(","):
            n_text, sep, w_text = part.partition("=")
            try:
                n, w = int(n_text), float(w_text)
            except ValueError:
                raise InputError(f"{text!r}: expected n=w terms, got {part!r}") from None
            if not sep:
                raise InputError(f"{text!r}: expected n=w terms, got {part!r}")
            if n in masses:
                raise InputError(f"{text!r}: duplicate index {n}")
            masses[n] = w
        try:
            return LifetimeDistribution.point_masses(masses)
        except InputError as exc:
            raise InputError(f"{text!r}: {exc}") from None
    return distribution_from_dict(read_json(text), text)
