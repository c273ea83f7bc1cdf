"""Data tables behind the standard plots of M_nu, extremal stable densities and
the sister functions.

Each builder returns a :class:`Table` whose ``series`` column labels the
curve. Nothing is plotted; the tables are meant for any plotting tool.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .config import get_config
from .errors import DomainError
from .results import EvalResult, Method
from .stable import stable_density, validate
from .tables import Row, Table, config_hash
from .tfdwe import four_sisters
from .wright import wright_m

X_GRID = np.linspace(0.0, 5.0, 101)
X_SYM_GRID = np.linspace(-5.0, 5.0, 201)
T_GRID = np.linspace(0.05, 5.0, 100)

LOW_NUS = (0.0, 0.125, 0.25, 0.375, 0.5)
HIGH_NUS = (0.5, 0.625, 0.75, 0.875)
SISTER_NUS = {7: 0.25, 8: 0.5, 9: 0.75}


def _label(name: str, value: float) -> str:
    return f"{name}={value:g}"


def _m_value(nu: float, x: float) -> EvalResult:
    if nu == 0.0:
        v = math.exp(-x)
        return EvalResult(v, 0.0, Method.CLOSED_FORM)
    return wright_m(nu, x)


def _m_family(title: str, nus, symmetric: bool) -> Table:
    table = Table(title)
    grid = X_SYM_GRID if symmetric else X_GRID
    for nu in nus:
        lab = _label("nu", nu)
        for x in grid:
            r = _m_value(nu, abs(x))
            table.rows.append(Row.of(x, r.scaled(0.5) if symmetric else r, lab))
    return table


def figure_1() -> Table:
    return _m_family("M_nu(x), 0 <= nu <= 1/2", LOW_NUS, symmetric=False)


def figure_2() -> Table:
    t = _m_family("M_nu(x), 1/2 <= nu <= 1", HIGH_NUS, symmetric=False)
    t.meta["nu=1"] = "point mass at x=1"
    return t


def _stable(title: str, alpha: float, theta: float, grid) -> Table:
    p = validate(alpha, theta)
    table = Table(title)
    lab = f"alpha={alpha:g},theta={theta:g}"
    for x in grid:
        table.rows.append(Row.of(x, stable_density(p, x), lab))
    return table


def figure_3() -> Table:
    return _stable("unilateral extremal stable density", 0.5, -0.5, X_GRID)


def figure_4() -> Table:
    return _stable("bilateral extremal stable density", 1.5, -0.5, X_SYM_GRID)


def figure_5() -> Table:
    return _m_family("symmetric M_nu(|x|)/2, 0 <= nu <= 1/2", LOW_NUS, symmetric=True)


def figure_6() -> Table:
    t = _m_family("symmetric M_nu(|x|)/2, 1/2 <= nu <= 1", HIGH_NUS, symmetric=True)
    t.meta["nu=1"] = "point masses of weight 1/2 at x=-1 and x=1"
    return t


def sister_label(nu: float, mu: float) -> str:
    if mu == 0.0:
        return "psi"
    if mu == 1.0:
        return "phi"
    if abs(mu - (1.0 - nu)) < 1e-15:
        return "chi"
    return "mu=nu"


def _sisters(nu: float) -> Table:
    table = Table(f"sister functions at nu={nu:g}")
    table.meta["vs_t"] = "x=1"
    table.meta["vs_x"] = "t=1"
    for t in T_GRID:
        for mu, r in four_sisters(nu, 1.0, float(t)).items():
            table.rows.append(Row.of(t, r, f"vs_t:{sister_label(nu, mu)}"))
    for x in X_GRID:
        for mu, r in four_sisters(nu, float(x), 1.0).items():
            table.rows.append(Row.of(x, r, f"vs_x:{sister_label(nu, mu)}"))
    return table


def figure_7() -> Table:
    return _sisters(SISTER_NUS[7])


def figure_8() -> Table:
    return _sisters(SISTER_NUS[8])


def figure_9() -> Table:
    return _sisters(SISTER_NUS[9])


FIGURES: dict[int, Callable[[], Table]] = {
    1: figure_1, 2: figure_2, 3: figure_3, 4: figure_4, 5: figure_5,
    6: figure_6, 7: figure_7, 8: figure_8, 9: figure_9,
}


def figure_table(fig_id: int | str) -> Table:
    """Build the table for figure ``fig_id`` (1..9) with metadata attached."""
    try:
        key = int(fig_id)
    except (TypeError, ValueError):
        raise DomainError(f"unknown figure id {fig_id!r}") from None
    if key not in FIGURES:
        raise DomainError(f"unknown figure id {fig_id!r}; choose 1..9")
    table = FIGURES[key]()
    cfg = get_config().as_dict()
    meta = {"figure": str(key), "config_sha256": config_hash(cfg, {"figure": key})}
    meta.update(table.meta)
    table.meta = meta
    return table


# ----------------------------------------------------------------------
# mechanical shape checks


def sign_changes(values) -> int:
    """Number of sign changes of the discrete first difference (flat steps ignored)."""
    d = np.sign(np.diff(np.asarray(values, dtype=float)))
    d = d[d != 0]
    return int(np.sum(d[1:] != d[:-1]))


def check_figure(table: Table, fig_id: int) -> list[str]:
    """Shape invariants of a figure table; returns a list of failures."""
    bad = []
    if fig_id in (1, 2, 5, 6):
        for lab in table.labels():
            vals = [r.value for r in table.series(lab)]
            if min(vals) < 0.0:
                bad.append(f"{lab}: negative value {min(vals)!r}")
    if fig_id in (3, 4):
        vals = [r.value for r in table.rows]
        if min(vals) < 0.0:
            bad.append(f"negative density {min(vals)!r}")
    if fig_id == 4:
        n = sign_changes([r.value for r in table.sorted_rows()])
        if n != 1:
            bad.append(f"bilateral density has {n} slope sign changes, expected 1")
    if fig_id == 8:
        vals = [r.value for r in table.series("vs_t:phi")]
        if not vals or np.any(np.diff(vals) <= 0.0):
            bad.append("step response phi is not increasing in t")
    if fig_id in (7, 8, 9):
        for lab in table.labels():
            vals = [r.value for r in table.series(lab)]
            if not all(math.isfinite(v) for v in vals):
                bad.append(f"{lab}: non-finite values")
    return bad


__all__ = ["FIGURES", "figure_table", "check_figure", "sign_changes", "sister_label"]
