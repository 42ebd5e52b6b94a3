"""Configuration settings for the gldouble verification engine."""
import json
import logging
from pathlib import Path
from typing import Any, Dict

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

BRACKETS = ("double", "std", "dual")


class Settings(BaseSettings):
    """Campaign defaults; CLI flags and the optional config file override them."""

    # Service settings
    app_name: str = "gldouble"
    app_version: str = "0.1.0"
    log_level: str = "INFO"
    schema_version: int = 1

    # Sampling
    sample_bound: int = 7
    resample_limit: int = 32

    # Mutation
    max_mutation_depth: int = 8
    divisibility_trials: int = 20

    # Campaign defaults
    default_points: int = 5
    default_trials: int = 10
    default_seed: int = 1
    default_bracket: str = "double"

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        """Accept level names in any case."""
        if isinstance(v, str):
            return v.strip().upper()
        return v

    @model_validator(mode="after")
    def validate_config(self):
        """Validate all ranges in one pass."""
        errors = []

        if self.sample_bound < 1:
            errors.append("sample_bound must be >= 1")
        if self.resample_limit < 1:
            errors.append("resample_limit must be >= 1")
        if self.max_mutation_depth < 1:
            errors.append("max_mutation_depth must be >= 1")
        if self.divisibility_trials < 1:
            errors.append("divisibility_trials must be >= 1")
        if self.default_points < 1 or self.default_trials < 1:
            errors.append("default_points and default_trials must be >= 1")
        if self.default_bracket not in BRACKETS:
            errors.append(f"default_bracket must be one of {', '.join(BRACKETS)}")
        if not isinstance(logging.getLevelName(self.log_level), int):
            errors.append(f"log_level '{self.log_level}' is not a logging level")

        if errors:
            raise ValueError(f"Configuration errors: {', '.join(errors)}")

        return self

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",  # config files also carry CLI flag values
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        # Explicit values only; the environment is never consulted.
        return (init_settings,)


def load_config_file(path: str | Path) -> Dict[str, Any]:
    """Read a JSON config file whose keys are CLI flag names or Settings fields."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must contain a JSON object")
    return {key.replace("-", "_"): value for key, value in data.items()}


def build_settings(overrides: Dict[str, Any] | None = None) -> Settings:
    """Build settings from defaults plus config-file overrides."""
    return Settings(**(overrides or {}))


settings = Settings()


def configure(overrides: Dict[str, Any] | None = None) -> Settings:
    """Validate overrides and apply them to the shared `settings` instance in place."""
    updated = build_settings({**settings.model_dump(), **(overrides or {})})
    for name in Settings.model_fields:
        setattr(settings, name, getattr(updated, name))
    return settings
