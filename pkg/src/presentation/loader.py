"""Loads presentations from files or inline text."""

import logging
from pathlib import Path

from src.presentation.document import from_json
from src.presentation.model import GroupPresentation
from src.presentation.parser import parse

logger = logging.getLogger(__name__)


def load_presentation(source: str) -> GroupPresentation:
    """
    Load a presentation from a ``.grp``/``.json`` path or from inline DSL/JSON text.

    Args:
        source: File path or the presentation text itself

    Returns:
        Validated presentation
    """
    text = source
    try:
        path = Path(source)
        is_file = path.is_file()
    except (OSError, ValueError):
        is_file = False
    if is_file:
        logger.info(f"Reading presentation from {path}")
        text = path.read_text()

    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse(text)
