from __future__ import annotations

import pytest

from matchgames.config import set_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.delenv("MATCHGAMES_MAX_LP_VARS", raising=False)
    set_settings(None)
    yield
    set_settings(None)
