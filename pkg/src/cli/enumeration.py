"""Enumerates the canonical instances of each family within parameter bounds."""

import logging
from itertools import product
from typing import Iterable, Iterator, List

from src.classify import FAMILY_SHAPES, CanonicalForm, canonical_presentation
from src.errors import UsageError
from src.presentation import GroupPresentation
from src.utils.modular import is_prime

logger = logging.getLogger(__name__)


def parse_families(text: str) -> List[int]:
    """
    Parse a family selection such as ``1-4,7``.

    Raises:
        UsageError: on malformed ranges or families outside 1..9
    """
    families = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise UsageError(f"Empty entry in family list {text!r}")
        low, _, high = part.partition("-")
        try:
            start, end = int(low), int(high or low)
        except ValueError:
            raise UsageError(f"Malformed family range {part!r}") from None
        if start > end or start < 1 or end > 9:
            raise UsageError(f"Family range {part!r} is not within 1-9")
        families.update(range(start, end + 1))
    return sorted(families)


def _twists(family: int, p: int) -> List[int]:
    if family != 6:
        return [1]
    return list(range(1, max(1, (p - 1) // 2) + 1))


def enumerate_forms(p: int, max_m: int, families: Iterable[int]) -> Iterator[CanonicalForm]:
    """
    Canonical forms with every m_i in 1..max_m, in family then parameter order.

    Family 7 lists m2 >= m3 only; family 6 lists every twist.
    """
    if not is_prime(p):
        raise UsageError(f"p = {p} is not prime")
    if max_m < 1:
        raise UsageError(f"max_m must be positive, got {max_m}")
    for family in sorted(set(families)):
        arity, _ = FAMILY_SHAPES[family]
        for m in product(range(1, max_m + 1), repeat=arity):
            if family == 7 and m[1] < m[2]:
                continue
            for twist in _twists(family, p):
                yield CanonicalForm(family=family, p=p, m=m, twist=twist)


def enumerate_instances(p: int, max_m: int, families: Iterable[int]) -> Iterator[GroupPresentation]:
    """One presentation per legal parameter tuple; families 5, 6, 8, 9 carry free factors."""
    for form in enumerate_forms(p, max_m, families):
        logger.debug(f"Enumerated {form}")
        yield canonical_presentation(form)
