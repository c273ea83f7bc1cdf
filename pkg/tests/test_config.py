import json

import pytest

from wrightkit import DomainError, wright_m
from wrightkit.config import Config, config_from_dict, get_config, load_config, use_config, with_tolerance


def test_defaults():
    cfg = Config()
    assert cfg.series.rel_tol == 1e-14 and cfg.quadrature.max_subdivisions == 500


def test_overrides_and_validation():
    cfg = config_from_dict({"series": {"max_terms": 800}, "thresholds": {"lk_min_width": 5e-4}})
    assert cfg.series.max_terms == 800 and cfg.thresholds.lk_min_width == 5e-4
    for bad in ({"sereis": {}}, {"series": {"rel_tol": 2.0}}, {"series": {"bogus": 1}}, [], {"series": 3}):
        with pytest.raises(DomainError):
            config_from_dict(bad)


def test_load_from_env(tmp_path, monkeypatch):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"quadrature": {"abs_tol": 1e-12}}))
    monkeypatch.setenv("WRIGHTKIT_CONFIG", str(p))
    assert get_config().quadrature.abs_tol == 1e-12
    monkeypatch.setenv("WRIGHTKIT_CONFIG", str(tmp_path / "missing.json"))
    with pytest.raises(DomainError):
        load_config()


def test_use_config_is_scoped():
    loose = with_tolerance(Config(), 1e-6)
    with use_config(loose):
        assert get_config().series.rel_tol == 1e-6
        v = wright_m(0.3, 1.0).value
    assert get_config().series.rel_tol == 1e-14
    assert v == pytest.approx(wright_m(0.3, 1.0).value, rel=1e-5)
