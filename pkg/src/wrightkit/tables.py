"""Grid specifications and CSV/JSON table emission.

Tables are lists of rows ``abscissa,value,method,err_est`` plus a ``series``
column naming the curve a row belongs to. Metadata go into ``#`` comment
lines, one of which is a sha256 hash of the configuration and parameters,
so identical inputs always produce byte-identical output.
"""
from __future__ import annotations

import enum
import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .results import EvalResult

COLUMNS = ("abscissa", "value", "method", "err_est", "series")


class Format(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


class Scale(str, enum.Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    count: int
    scale: Scale = Scale.LINEAR

    def __post_init__(self):
        object.__setattr__(self, "scale", Scale(self.scale))
        if self.count < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.count}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise DomainError(f"grid needs finite min < max, got {self.lo}:{self.hi}")
        if self.scale is Scale.LOG and self.lo <= 0:
            raise DomainError("a log grid needs min > 0")

    @classmethod
    def parse(cls, text: str, log: bool = False) -> "GridSpec":
        """Parse ``min:max:count``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"grid must look like min:max:count, got {text!r}")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise DomainError(f"bad grid {text!r}: {exc}") from None
        return cls(lo, hi, n, Scale.LOG if log else Scale.LINEAR)

    def points(self) -> list[float]:
        if self.scale is Scale.LOG:
            pts = np.geomspace(self.lo, self.hi, self.count)
        else:
            pts = np.linspace(self.lo, self.hi, self.count)
        return [float(v) for v in pts]

    def as_text(self) -> str:
        return f"{self.lo!r}:{self.hi!r}:{self.count}:{self.scale.value}"


@dataclass(frozen=True)
class Row:
    abscissa: float
    value: float
    method: str
    err_est: float
    series: str = ""

    @classmethod
    def of(cls, x: float, res: EvalResult, series: str = "") -> "Row":
        method = getattr(res.method, "value", str(res.method))
        if res.accuracy_loss:
            method += "+accuracy_loss"
        return cls(float(x), float(res.value), method, float(res.err_est), series)


@dataclass
class Table:
    """Rows plus ordered metadata."""

    name: str
    rows: list[Row] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def sorted_rows(self) -> list[Row]:
        # series keep their first-appearance order; rows within a series go by abscissa
        order = {}
        for r in self.rows:
            order.setdefault(r.series, len(order))
        return sorted(self.rows, key=lambda r: (order[r.series], r.abscissa))

    def series(self, label: str) -> list[Row]:
        return [r for r in self.sorted_rows() if r.series == label]

    def labels(self) -> list[str]:
        seen = []
        for r in self.rows:
            if r.series not in seen:
                seen.append(r.series)
        return seen


def _num(v: float) -> str:
    return repr(float(v))


def config_hash(config_dict: dict, params: dict) -> str:
    blob = json.dumps({"config": config_dict, "params": params}, sort_keys=True, default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def render_csv(table: Table) -> str:
    lines = [f"# table: {table.name}"]
    for k, v in table.meta.items():
        lines.append(f"# {k}: {v}")
    lines.append(",".join(COLUMNS))
    for r in table.sorted_rows():
        lines.append(",".join((_num(r.abscissa), _num(r.value), r.method, _num(r.err_est), r.series)))
    return "\n".join(lines) + "\n"


def _json_num(v: float):
    return v if math.isfinite(v) else repr(v)


def render_json(table: Table) -> str:
    doc = {
        "table": table.name,
        "meta": table.meta,
        "columns": list(COLUMNS),
        "rows": [[_json_num(r.abscissa), _json_num(r.value), r.method, _json_num(r.err_est), r.series]
                 for r in table.sorted_rows()],
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def render(table: Table, fmt: Format | str) -> str:
    return render_csv(table) if Format(fmt) is Format.CSV else render_json(table)


def read_csv(text: str) -> Table:
    """Parse text written by :func:`render_csv` back into a table."""
    meta, rows, name = {}, [], ""
    header_seen = False
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition(": ")
            if key == "table":
                name = val
            else:
                meta[key] = val
            continue
        if not header_seen:
            header_seen = True
            continue
        a, v, m, e, s = line.split(",", 4)
        rows.append(Row(float(a), float(v), m, float(e), s))
    return Table(name, rows, meta)


__all__ = [
    "COLUMNS", "Format", "Scale", "GridSpec", "Row", "Table", "config_hash", "render_csv",
    "render_json", "render", "read_csv",
]
