"""Configuration management utilities."""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent.parent / "config" / "default.yaml"


class OracleSettings(BaseModel):
    max_order: int = Field(default=4096, ge=1)
    iso_max_order: int = Field(default=729, ge=1)
    direct_factor_max_order: int = Field(default=512, ge=1)


class ScrambleSettings(BaseModel):
    rounds: int = Field(default=100, ge=0)
    moves_per_round: int = Field(default=12, ge=0)
    seed: int = 20240101


class EnumerateSettings(BaseModel):
    p: int = Field(default=2, ge=2)
    max_m: int = Field(default=2, ge=1)
    families: str = "1-9"


class OutputSettings(BaseModel):
    json_output: bool = Field(default=False, alias="json")


class LoggingSettings(BaseModel):
    level: str = "WARNING"

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level {value!r}")
        return level


class Settings(BaseModel):
    """Validated shape of config/default.yaml."""

    oracle: OracleSettings = Field(default_factory=OracleSettings)
    scramble: ScrambleSettings = Field(default_factory=ScrambleSettings)
    enumerate: EnumerateSettings = Field(default_factory=EnumerateSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


def load_config(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load configuration from a YAML file and environment variables.

    CPXCP_MAX_ORDER, CPXCP_SEED and CPXCP_LOG_LEVEL override the file.

    Args:
        path: YAML file, config/default.yaml when omitted

    Returns:
        Configuration dictionary
    """
    config_path = Path(path) if path else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path) as f:
        config = yaml.safe_load(f) or {}

    load_dotenv()

    # Override with environment variables
    if os.getenv("CPXCP_MAX_ORDER"):
        config.setdefault("oracle", {})["max_order"] = int(os.getenv("CPXCP_MAX_ORDER"))
    if os.getenv("CPXCP_SEED"):
        config.setdefault("scramble", {})["seed"] = int(os.getenv("CPXCP_SEED"))
    if os.getenv("CPXCP_LOG_LEVEL"):
        config.setdefault("logging", {})["level"] = os.getenv("CPXCP_LOG_LEVEL")

    return Settings.model_validate(config).model_dump(by_alias=True)
