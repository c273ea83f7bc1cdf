"""Run-time configuration: tolerances and branch-switch thresholds.

Defaults live here; a JSON file named by the ``WRIGHTKIT_CONFIG``
environment variable may override any of them::

    {"series": {"rel_tol": 1e-13},
     "quadrature": {"abs_tol": 1e-12},
     "thresholds": {"lk_min_width": 5e-4}}

The table is read once and is immutable afterwards.
"""
from __future__ import annotations

import dataclasses
import contextlib
import contextvars
import functools
import json
import os
from dataclasses import dataclass, field

from .errors import DomainError
from .results import QuadratureControl, SeriesControl

ENV_VAR = "WRIGHTKIT_CONFIG"


@dataclass(frozen=True)
class Thresholds:
    """Branch-selection table for the M-Wright dispatcher.

    ``m_series_max`` lists (nu, x) pairs beyond which the series is not even
    attempted (the cancellation guard would trip); values are interpolated
    linearly in nu. ``lk_min_width`` is the relative width of the
    integrand peak below which the saddle-point formula replaces quadrature.
    """

    m_series_max: tuple[tuple[float, float], ...] = (
        (0.0, 2.6),
        (0.1, 2.7),
        (0.25, 3.3),
        (0.5, 3.2),
        (0.6, 2.9),
        (0.75, 2.3),
        (0.9, 1.5),
        (1.0, 1.0),
    )
    lk_min_width: float = 1e-3


@dataclass(frozen=True)
class Config:
    series: SeriesControl = field(default_factory=SeriesControl)
    quadrature: QuadratureControl = field(default_factory=QuadratureControl)
    thresholds: Thresholds = field(default_factory=Thresholds)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _merge(cls, base, overrides: dict):
    if not isinstance(overrides, dict):
        raise DomainError(f"config section for {cls.__name__} must be an object")
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = set(overrides) - known
    if unknown:
        raise DomainError(f"unknown {cls.__name__} keys: {sorted(unknown)}")
    vals = dict(overrides)
    if cls is Thresholds and "m_series_max" in vals:
        vals["m_series_max"] = tuple(tuple(map(float, p)) for p in vals["m_series_max"])
    return dataclasses.replace(base, **vals)


def config_from_dict(data: dict) -> Config:
    if not isinstance(data, dict):
        raise DomainError("config file must hold a JSON object")
    unknown = set(data) - {"series", "quadrature", "thresholds"}
    if unknown:
        raise DomainError(f"unknown config sections: {sorted(unknown)}")
    base = Config()
    return Config(
        series=_merge(SeriesControl, base.series, data.get("series", {})),
        quadrature=_merge(QuadratureControl, base.quadrature, data.get("quadrature", {})),
        thresholds=_merge(Thresholds, base.thresholds, data.get("thresholds", {})),
    )


@functools.lru_cache(maxsize=None)
def _load(path: str | None) -> Config:
    if not path:
        return Config()
    with open(path, encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))


_override: contextvars.ContextVar[Config | None] = contextvars.ContextVar("wrightkit_config", default=None)


def load_config(path: str | None = None) -> Config:
    """Config from ``path``, or from ``WRIGHTKIT_CONFIG`` when no path is given."""
    try:
        return _load(path if path is not None else os.environ.get(ENV_VAR))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read config: {exc}") from exc
    except TypeError as exc:
        raise DomainError(f"bad config value: {exc}") from exc


def get_config() -> Config:
    """Configuration in force, honouring ``WRIGHTKIT_CONFIG`` and :func:`use_config`."""
    cfg = _override.get()
    return cfg if cfg is not None else load_config()


@contextlib.contextmanager
def use_config(cfg: Config):
    """Temporarily install ``cfg`` as the configuration in force."""
    token = _override.set(cfg)
    try:
        yield cfg
    finally:
        _override.reset(token)


def with_tolerance(cfg: Config, rel_tol: float) -> Config:
    """Copy of ``cfg`` with the series and quadrature relative tolerances set to ``rel_tol``."""
    return dataclasses.replace(
        cfg,
        series=dataclasses.replace(cfg.series, rel_tol=rel_tol),
        quadrature=dataclasses.replace(cfg.quadrature, rel_tol=rel_tol),
    )
