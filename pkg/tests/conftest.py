import os

import hypothesis
import numpy as np
import pytest

from utils.config import get_settings

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """Each test gets its own store directory and freshly read settings."""
    monkeypatch.setenv("SHELLGAP_STORE_DIR", str(tmp_path / "results"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def small_batches(monkeypatch):
    """Small numpy batches so modest spaces are split across workers."""
    monkeypatch.setenv("SHELLGAP_BATCH_SIZE", "256")
    get_settings.cache_clear()
    return get_settings()
