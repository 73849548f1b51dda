"""Generates machine-readable line-delimited JSON."""

import json
import logging
from typing import Any, Dict, Iterable, List

logger = logging.getLogger(__name__)


class JsonReport:
    """One JSON object per line with sorted keys, so output is byte-stable across runs."""

    def __init__(self, config: Dict[str, Any]):
        """Initialize JSON report generator."""
        self.config = config

    def render(self, records: Iterable[Dict[str, Any]]) -> List[str]:
        """
        Serialize records.

        Args:
            records: JSON-compatible dictionaries

        Returns:
            One line per record
        """
        lines = [json.dumps(record, sort_keys=True) for record in records]
        logger.debug(f"Rendered {len(lines)} JSON line(s)")
        return lines
