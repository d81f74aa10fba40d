from __future__ import annotations

import os

import pytest

from matchgames.config import (
    LP_VARS_ENV,
    Limits,
    Settings,
    get_settings,
    guess_conf_path,
    load_settings,
    set_settings,
)
from matchgames.errors import InputError

DOCS = os.path.join(os.path.dirname(os.path.dirname(__file__)), "docs")


def test_defaults():
    s = Settings.from_dict(None)
    assert s == Settings()
    assert s.limits.lp_vars == 40000
    assert s.limits.matching_vertices == 32
    assert s.seed == 0
    assert s.workers == 1


def test_from_dict():
    s = Settings.from_dict({"seed": 7, "workers": 0, "limits": {"lp_vars": "100", "fpm_scale": 8}})
    assert s.seed == 7
    assert s.workers == 1
    assert s.limits.lp_vars == 100
    assert s.limits.fpm_scale == 8
    assert s.limits.independence_vertices == Limits().independence_vertices


@pytest.mark.parametrize("d", [
    {"limits": {"lp_vars": "many"}},
    {"limits": {"fpm_scale": None}},
    {"limits": [1, 2]},
    {"seed": "zero"},
    {"workers": []},
])
def test_invalid_values(d):
    with pytest.raises(InputError):
        Settings.from_dict(d)


def test_load_yaml(tmp_path):
    conf = tmp_path / "matchgames.yml"
    conf.write_text("seed: 3\nlimits:\n  lp_vars: 500\n")
    s = Settings.load_yaml(str(conf))
    assert s.seed == 3
    assert s.limits.lp_vars == 500
    assert s.limits.classical_assignments == Limits().classical_assignments


def test_example_config_matches_defaults():
    assert Settings.load_yaml(os.path.join(DOCS, "matchgames.example.yml")) == Settings()


def test_load_yaml_rejects_non_mapping(tmp_path):
    conf = tmp_path / "bad.yml"
    conf.write_text("- 1\n- 2\n")
    with pytest.raises(InputError):
        Settings.load_yaml(str(conf))


def test_empty_yaml_gives_defaults(tmp_path):
    conf = tmp_path / "empty.yml"
    conf.write_text("")
    assert Settings.load_yaml(str(conf)) == Settings()


def test_env_override():
    s = Settings().with_env({LP_VARS_ENV: "1234"})
    assert s.limits.lp_vars == 1234
    assert Settings().with_env({}) == Settings()
    with pytest.raises(InputError):
        Settings().with_env({LP_VARS_ENV: "lots"})


def test_guess_conf_path(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert guess_conf_path(None) is None
    assert guess_conf_path("other.yml") == "other.yml"
    (tmp_path / "matchgames.yaml").write_text("seed: 1\n")
    assert guess_conf_path(None) == "matchgames.yaml"
    (tmp_path / "matchgames.yml").write_text("seed: 2\n")
    assert guess_conf_path(None) == "matchgames.yml"


def test_load_settings(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_settings() == Settings()
    (tmp_path / "matchgames.yml").write_text("workers: 4\n")
    monkeypatch.setenv(LP_VARS_ENV, "99")
    s = load_settings()
    assert s.workers == 4
    assert s.limits.lp_vars == 99


def test_current_settings(monkeypatch):
    monkeypatch.setenv(LP_VARS_ENV, "55")
    assert get_settings().limits.lp_vars == 55
    set_settings(Settings(seed=9))
    assert get_settings().seed == 9
    assert get_settings().limits.lp_vars == 40000
