from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config.settings import ExperimentSettings, load_settings


class TestLoadSettings:
    """Settings come from overrides and an optional key=value file only."""

    def test_defaults(self):
        settings = load_settings()
        assert settings.seed == 0
        assert settings.output_dir == Path("runs")
        assert settings.workers == 1
        assert settings.log_level == "INFO"

    def test_config_file_and_overrides(self, tmp_path):
        config = tmp_path / "exp.conf"
        config.write_text("seed=7\nworkers=3\nlog_level=debug\nmembership=4.5\nsize-spread=0.1\n", encoding="utf-8")
        settings = load_settings(config, workers=2, seed=None)
        assert settings.seed == 7  # noqa: PLR2004
        assert settings.workers == 2  # noqa: PLR2004
        assert settings.log_level == "DEBUG"
        assert settings.command_defaults() == {"membership": "4.5", "size_spread": "0.1"}

    def test_environment_is_ignored(self, monkeypatch):
        monkeypatch.setenv("SEED", "99")
        assert load_settings().seed == 0

    @pytest.mark.parametrize("values", [{"workers": 0}, {"log_level": "chatty"}, {"max_patterns": 0}])
    def test_invalid_values(self, values):
        with pytest.raises(ValidationError):
            ExperimentSettings(**values)
