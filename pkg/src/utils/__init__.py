"""Utilities module."""

from src.utils.config import Settings, load_config

__all__ = ["Settings", "load_config"]
