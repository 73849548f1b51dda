"""Command-line front end module."""

from src.cli.checks import CheckResult, CheckSuite
from src.cli.commands import Command, CommandRunner, run
from src.cli.enumeration import enumerate_forms, enumerate_instances, parse_families

__all__ = [
    "CheckResult",
    "CheckSuite",
    "Command",
    "CommandRunner",
    "enumerate_forms",
    "enumerate_instances",
    "parse_families",
    "run",
]
