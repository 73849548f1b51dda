"""Rebases the center so the commutator is a power of its first factor."""

import logging

from src.abelian import CentralVector
from src.errors import PresentationValidationError
from src.normalize.basis import BasisChange, rebase, reorder, replace_factor, split_primary
from src.presentation import GroupPresentation, Violation, ViolationKind
from src.utils.modular import p_valuation

logger = logging.getLogger(__name__)


def _order_not_p(pres: GroupPresentation) -> PresentationValidationError:
    detail = f"comm {pres.s} does not have order {pres.p}"
    return PresentationValidationError([Violation(ViolationKind.COMMUTATOR_ORDER_NOT_P, detail)])


def locate_t1_change(pres: GroupPresentation) -> BasisChange:
    """
    Basis change after which s = t1^(p^(m1-1)) with t1 the first factor.

    Over the p-primary factors s has coordinates c_j * p^(m_j - 1). The pivot is the
    factor with c_j != 0 and the smallest m_j (earliest on ties); it is replaced by
    t' = sum c_j p^(m_j - m) e_j, which has order p^m and p^(m-1) t' = s.
    """
    p = pres.p
    split = split_primary(pres.center, p)
    center = split.new
    s = split.apply(pres.s)

    candidates = []
    for index, f in enumerate(center.factors):
        value = s.get(f.name)
        if not value:
            continue
        if not f.order.is_finite or f.order.n % p:
            raise _order_not_p(pres)
        m = p_valuation(f.order.n, p)
        step = p ** (m - 1)
        if value % step:
            raise _order_not_p(pres)
        candidates.append((m, index, f.name, (value // step) % p))
    if not candidates:
        raise PresentationValidationError(
            [Violation(ViolationKind.TRIVIAL_COMMUTATOR, "comm is the identity")]
        )

    m_min, _, pivot, _ = min(candidates)
    combination = CentralVector.of({name: c * p ** (m - m_min) for m, _, name, c in candidates})
    replace = replace_factor(center, pivot, combination)
    order = reorder(center, [pivot] + [n for n in center.names if n != pivot])
    return split.compose(replace).compose(order)


def locate_t1(pres: GroupPresentation) -> GroupPresentation:
    """
    Rebase the center so s = t1^(p^(m1-1)) exactly, with t1 listed first.

    Args:
        pres: Valid presentation

    Returns:
        Presentation of the same group over the rebased center
    """
    change = locate_t1_change(pres)
    if change.is_identity:
        return pres
    result = rebase(pres, change)
    logger.debug(f"Located t1 = {result.center.names[0]} (order {result.center.factors[0].order})")
    return result


def first_factor_height(pres: GroupPresentation) -> int:
    """m1 for a presentation already in located form."""
    return p_valuation(pres.center.factors[0].order.n, pres.p)
