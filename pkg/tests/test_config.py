import pytest

from torslab.config import WorkbenchConfig, get_config, set_config
from torslab.errors import ConfigError


class TestFromEnv:
    def test_defaults(self):
        config = WorkbenchConfig.from_env()
        assert config.max_indecs == 22
        assert config.field == 2
        assert config.seed == 0

    def test_environment_wins_over_defaults(self, monkeypatch):
        monkeypatch.setenv("TORSLAB_FIELD", "3")
        monkeypatch.setenv("TORSLAB_JOBS", "4")
        config = WorkbenchConfig.from_env()
        assert (config.field, config.jobs) == (3, 4)

    def test_garbage_value(self, monkeypatch):
        monkeypatch.setenv("TORSLAB_MAX_INDECS", "lots")
        with pytest.raises(ConfigError):
            WorkbenchConfig.from_env()

    def test_unsupported_field(self, monkeypatch):
        monkeypatch.setenv("TORSLAB_FIELD", "7")
        with pytest.raises(ConfigError):
            WorkbenchConfig.from_env()

    def test_log_level(self, monkeypatch):
        monkeypatch.setenv("TORSLAB_LOG_LEVEL", "debug")
        assert WorkbenchConfig.from_env().log_level == "DEBUG"
        monkeypatch.setenv("TORSLAB_LOG_LEVEL", "chatty")
        with pytest.raises(ConfigError):
            WorkbenchConfig.from_env()


class TestOverrides:
    def test_none_leaves_value(self):
        config = WorkbenchConfig().with_overrides(seed=None, jobs=2)
        assert config.seed == 0 and config.jobs == 2

    def test_caps_must_be_positive(self):
        with pytest.raises(ConfigError):
            WorkbenchConfig().with_overrides(max_indecs=0)


def test_process_wide_config():
    custom = WorkbenchConfig(seed=7)
    set_config(custom)
    assert get_config() is custom
