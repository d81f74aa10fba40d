from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

import yaml

from matchgames.errors import InputError

logger = logging.getLogger("matchgames.config")

CONFIG_FILENAMES = ("matchgames.yml", "matchgames.yaml")
LP_VARS_ENV = "MATCHGAMES_MAX_LP_VARS"


@dataclass(frozen=True)
class Limits:
    matching_vertices: int = 32
    independence_vertices: int = 24
    lp_vars: int = 40000
    classical_assignments: int = 4_000_000
    fpm_scale: int = 4096

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Limits":
        base = cls()
        values = {}
        for key in ("matching_vertices", "independence_vertices", "lp_vars", "classical_assignments", "fpm_scale"):
            raw = d.get(key, getattr(base, key))
            try:
                values[key] = int(raw)
            except (TypeError, ValueError):
                raise InputError(f"limits.{key} must be an integer, got {raw!r}")
        return cls(**values)


@dataclass(frozen=True)
class Settings:
    limits: Limits = field(default_factory=Limits)
    seed: int = 0
    workers: int = 1

    @classmethod
    def from_dict(cls, d: Optional[Dict[str, Any]]) -> "Settings":
        d = d or {}
        limits = d.get("limits") or {}
        if not isinstance(limits, dict):
            raise InputError("limits must be a mapping")
        try:
            seed = int(d.get("seed", 0))
            workers = max(1, int(d.get("workers", 1)))
        except (TypeError, ValueError):
            raise InputError("seed and workers must be integers")
        return cls(limits=Limits.from_dict(limits), seed=seed, workers=workers)

    @classmethod
    def load_yaml(cls, config_file: str) -> "Settings":
        with open(config_file) as f:
            obj = yaml.safe_load(f)
        if obj is not None and not isinstance(obj, dict):
            raise InputError(f"{config_file}: top level must be a mapping")
        return cls.from_dict(obj)

    def with_env(self, environ: Optional[Dict[str, str]] = None) -> "Settings":
        environ = os.environ if environ is None else environ
        raw = environ.get(LP_VARS_ENV)
        if not raw:
            return self
        try:
            lp_vars = int(raw)
        except ValueError:
            raise InputError(f"{LP_VARS_ENV} must be an integer, got {raw!r}")
        return replace(self, limits=replace(self.limits, lp_vars=lp_vars))


def guess_conf_path(p: Optional[str]) -> Optional[str]:
    if p:
        return p
    for f in CONFIG_FILENAMES:
        if os.path.exists(f):
            return f
    return None


def load_settings(config_path: Optional[str] = None) -> Settings:
    path = guess_conf_path(config_path)
    settings = Settings.load_yaml(path) if path else Settings()
    if path:
        logger.debug("loaded settings from %s", path)
    return settings.with_env()


_current: Optional[Settings] = None


def get_settings() -> Settings:
    global _current
    if _current is None:
        _current = Settings().with_env()
    return _current


def set_settings(settings: Optional[Settings]) -> None:
    global _current
    _current = settings
