"""The identity linking zeta_K(-1), chi_h(SL_2(O_K)) and torsion in SL_2(O_K).

For a totally real field ``K``,

    chi_h(SL_2(O_K), Q) = 2 zeta_K(-1) + 1/2 sum_xi count_xi sum_I c_I / t_I

where ``xi`` runs over roots of unity with ``[K(xi):K] = 2``, ``I`` over the
ideal classes attached to ``xi``, ``c_I`` is the order of the cokernel of
the norm on units and ``t_I`` the number of torsion units. The unit and
class group data come from declarative JSON files.

File format::

    {
      "name": "Q",
      "degree": 1,
      "xi_entries": [
        {"xi": "i", "count": 2,
         "ideal_classes": [{"cokernel_size": 2, "torsion_units": 4}]}
      ],
      "chi_h": "1",            # optional, "p/q"
      "zeta_minus_one": "-1/12" # optional, "p/q"
    }

``count`` is how many roots of unity share the entry's data (``xi`` and
``xi^-1`` at least), so the ``1/2`` that folds ``xi`` with ``xi^-1`` is
applied here and not in the data.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

DATA_DIR_ENV = "EULERCHAR_DATA_DIR"


class FieldDataError(ValueError):
    """Malformed field-data file; carries the offending line and field."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None, source: str = "") -> None:
        self.line, self.field, self.source = line, field, source
        where = ":".join(str(x) for x in (source, line) if x not in ("", None))
        prefix = f"{where}: " if where else ""
        suffix = f" (field {field!r})" if field else ""
        super().__init__(f"{prefix}{message}{suffix}")


@dataclass(frozen=True)
class IdealClassData:
    cokernel_size: int
    torsion_units: int


@dataclass(frozen=True)
class XiEntry:
    xi: str
    count: int
    ideal_classes: tuple[IdealClassData, ...]


@dataclass(frozen=True)
class FieldData:
    name: str
    degree: int
    xi_entries: tuple[XiEntry, ...]
    chi_h: Fraction | None = None
    zeta_minus_one: Fraction | None = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be positive")
        for entry in self.xi_entries:
            if entry.count < 1:
                raise ValueError(f"count for {entry.xi} must be positive")
            for ic in entry.ideal_classes:
                if ic.cokernel_size < 1:
                    raise ValueError(f"cokernel size for {entry.xi} must be at least 1")
                if ic.torsion_units < 2:
                    raise ValueError(f"torsion units for {entry.xi} must be at least 2")


# --- parsing -----------------------------------------------------------------------------------


def parse_rational(text) -> Fraction:
    """``"p/q"`` or an integer; floats are refused to keep values exact."""
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"expected an exact rational 'p/q', got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not re.fullmatch(r"\s*[+-]?\d+\s*(/\s*\d+\s*)?", text):
        raise ValueError(f"expected an exact rational 'p/q', got {text!r}")
    return Fraction(text.replace(" ", ""))


class _Locator:
    """Maps field names to source lines by scanning for quoted keys in order."""

    def __init__(self, text: str) -> None:
        self._text = text
        self._cursor: dict[str, int] = {}

    def line(self, key: str, occurrence: int = 0) -> int | None:
        hits = [m.start() for m in re.finditer(rf'"{re.escape(key)}"\s*:', self._text)]
        if not hits:
            return None
        pos = hits[min(occurrence, len(hits) - 1)]
        return self._text.count("\n", 0, pos) + 1


def _require(obj: dict, key: str, kind, loc: _Locator, source: str, path: str, occurrence: int = 0):
    if not isinstance(obj, dict):
        raise FieldDataError(f"expected an object at {path or 'top level'}", source=source, field=path or None)
    full = f"{path}.{key}" if path else key
    if key not in obj:
        raise FieldDataError("missing required field", field=full, source=source)
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise FieldDataError(f"expected an integer, got {value!r}", line=loc.line(key, occurrence), field=full, source=source)
    if kind is not int and not isinstance(value, kind):
        raise FieldDataError(
            f"expected {kind.__name__}, got {type(value).__name__}", line=loc.line(key, occurrence), field=full, source=source
        )
    return value


def parse_field_data(text: str, source: str = "") -> FieldData:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FieldDataError(exc.msg, line=exc.lineno, source=source) from None
    loc = _Locator(text)
    name = _require(raw, "name", str, loc, source, "")
    degree = _require(raw, "degree", int, loc, source, "")
    entries = _require(raw, "xi_entries", list, loc, source, "")
    parsed = []
    class_no = 0
    for k, entry in enumerate(entries):
        path = f"xi_entries[{k}]"
        xi = _require(entry, "xi", str, loc, source, path, k)
        count = _require(entry, "count", int, loc, source, path, k)
        classes = _require(entry, "ideal_classes", list, loc, source, path, k)
        ics = []
        for j, ic in enumerate(classes):
            cpath = f"{path}.ideal_classes[{j}]"
            c = _require(ic, "cokernel_size", int, loc, source, cpath, class_no)
            t = _require(ic, "torsion_units", int, loc, source, cpath, class_no)
            if c < 1:
                raise FieldDataError("must be at least 1", line=loc.line("cokernel_size", class_no), field=f"{cpath}.cokernel_size", source=source)
            if t < 2:
                raise FieldDataError("must be at least 2", line=loc.line("torsion_units", class_no), field=f"{cpath}.torsion_units", source=source)
            ics.append(IdealClassData(c, t))
            class_no += 1
        if count < 1:
            raise FieldDataError("must be positive", line=loc.line("count", k), field=f"{path}.count", source=source)
        parsed.append(XiEntry(xi, count, tuple(ics)))
    known = {}
    for key in ("chi_h", "zeta_minus_one"):
        if raw.get(key) is not None:
            try:
                known[key] = parse_rational(raw[key])
            except ValueError as exc:
                raise FieldDataError(str(exc), line=loc.line(key), field=key, source=source) from None
    if degree < 1:
        raise FieldDataError("must be positive", line=loc.line("degree"), field="degree", source=source)
    return FieldData(name, degree, tuple(parsed), **known)


def data_dir() -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("brownchi") / "data"))


def load_field_data(ref: str | os.PathLike) -> FieldData:
    """Load by path, or by bundled name such as ``Q`` or ``Q_sqrt5``."""
    path = Path(ref)
    if not path.suffix and not path.exists():
        path = data_dir() / f"{ref}.json"
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FieldDataError(f"cannot read field data: {exc.strerror}", source=str(path)) from None
    return parse_field_data(text, source=str(path))


# --- the identity --------------------------------------------------------------------------------


def torsion_contribution(fd: FieldData) -> Fraction:
    total = Fraction(0)
    for entry in fd.xi_entries:
        for ic in entry.ideal_classes:
            total += entry.count * Fraction(ic.cokernel_size, ic.torsion_units)
    return total / 2


def solve_identity(fd: FieldData, *, chi_h: Fraction | None = None, zeta: Fraction | None = None) -> Fraction:
    """Given one of ``chi_h`` and ``zeta_K(-1)``, return the other."""
    if (chi_h is None) == (zeta is None):
        raise ValueError("supply exactly one of chi_h and zeta")
    contribution = torsion_contribution(fd)
    if chi_h is not None:
        return (Fraction(chi_h) - contribution) / 2
    return 2 * Fraction(zeta) + contribution


def integrality_check(fd: FieldData, zeta: Fraction) -> bool:
    """Whether the ``chi_h`` implied by ``zeta`` is an integer."""
    return solve_identity(fd, zeta=zeta).denominator == 1
