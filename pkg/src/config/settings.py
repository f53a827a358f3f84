"""Run-level settings for the experiment harness.

Values come from keyword arguments and, optionally, a flat ``key=value`` config
file. Environment variables are never read.
"""

import logging
from pathlib import Path
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from src.constants.app_constants import TEXT_ENCODING, SynthConst

GLOBAL_KEYS = ("seed", "output_dir", "workers", "log_level", "max_patterns")


class ExperimentSettings(BaseSettings):
    """Global options shared by every command.

    Keys in the config file that are not global options are kept in
    ``model_extra`` and later applied as defaults for the selected command.
    """

    seed: int = 0
    output_dir: Path = Path("runs")
    workers: int = Field(default=1, ge=1)
    log_level: str = "INFO"
    max_patterns: int = Field(default=SynthConst.MAX_PATTERNS, ge=1)

    model_config = SettingsConfigDict(
        env_file=None,
        env_file_encoding=TEXT_ENCODING,
        case_sensitive=False,
        extra="allow",
    )

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in logging.getLevelNamesMapping():
            msg = f"unknown log level {value!r}"
            raise ValueError(msg)
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],  # noqa: ARG003
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,  # noqa: ARG003
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,  # noqa: ARG003
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return init_settings, dotenv_settings

    def command_defaults(self) -> dict[str, Any]:
        """Config-file keys that belong to a sub-command, normalized to argparse dests."""
        extras = self.model_extra or {}
        return {key.replace("-", "_").lower(): value for key, value in extras.items()}


def load_settings(config_path: str | Path | None = None, **overrides: Any) -> ExperimentSettings:
    """Build settings from an optional config file, with explicit overrides winning."""
    values = {key: value for key, value in overrides.items() if value is not None}
    if config_path is None:
        return ExperimentSettings(**values)
    return ExperimentSettings(_env_file=config_path, **values)
