"""Reporting module."""

from src.reporting.json_report import JsonReport
from src.reporting.text_report import TextReport

__all__ = ["JsonReport", "TextReport"]
