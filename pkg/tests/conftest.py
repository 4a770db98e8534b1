import pytest

from torslab.config import WorkbenchConfig
from torslab.nakayama import parse_algebra


@pytest.fixture
def lin2():
    return parse_algebra("linA:2")


@pytest.fixture
def lin3():
    return parse_algebra("linA:3")


@pytest.fixture
def lin4():
    return parse_algebra("linA:4")


@pytest.fixture
def cyc33():
    return parse_algebra("nakayama:cyclic:3,3")


@pytest.fixture
def config():
    return WorkbenchConfig(cjr_samples=200)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    # keep TORSLAB_* exports out of the tests
    for name in ("TORSLAB_MAX_INDECS", "TORSLAB_FIELD", "TORSLAB_SEED", "TORSLAB_JOBS", "TORSLAB_CATALOG",
                 "TORSLAB_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("torslab.config._config", None)
