"""Presentation DSL module."""

from src.presentation.document import PresentationDocument, from_json, to_json
from src.presentation.emitter import emit, format_word
from src.presentation.loader import load_presentation
from src.presentation.model import GroupPresentation, Violation, ViolationKind, validate
from src.presentation.parser import parse

__all__ = [
    "GroupPresentation",
    "PresentationDocument",
    "Violation",
    "ViolationKind",
    "emit",
    "format_word",
    "from_json",
    "load_presentation",
    "parse",
    "to_json",
    "validate",
]
