"""Case machines taking a located core of center rank 1, 2 or 3 to its family."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.abelian import CentralVector, FgAbelian
from src.classify.canonical import FAMILY_NAMES, CanonicalForm, canonical_presentation
from src.classify.core import COSETS, CoreData, CoreWorkspace
from src.errors import ClassificationError
from src.normalize import Step, rename, reorder, replace_factor
from src.presentation import GroupPresentation
from src.utils.modular import inv_mod, p_valuation, solve_combination

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Canonical:
    form: CanonicalForm
    presentation: GroupPresentation
    steps: Tuple[Step, ...]


@dataclass(frozen=True)
class SplitFound:
    """A nontrivial abelian direct factor together with the smaller core left behind."""

    factor: FgAbelian
    reduced: GroupPresentation
    steps: Tuple[Step, ...]


ClassifyOutcome = Union[Canonical, SplitFound]


def _split(ws: CoreWorkspace, rows: List[List[int]], pivots: List[int]) -> Optional[SplitFound]:
    """Rebase each pivot factor onto its summand row; the other factors split off."""
    data = ws.data()
    if len(pivots) == data.rank:
        return None
    names = data.names
    for row, pivot in zip(rows, pivots):
        combination = CentralVector.of({names[k]: c for k, c in enumerate(row) if c})
        ws.rebase(replace_factor(ws.pres.center, names[pivot], combination))
    ws.reduce()

    kept = [n for k, n in enumerate(names) if k in pivots]
    dropped = [n for n in names if n not in kept]
    factor = ws.pres.center.restrict(dropped)
    ws.restrict(kept)
    logger.info(f"Split found: {factor} leaves a rank-{len(kept)} core")
    return SplitFound(factor, ws.pres, tuple(ws.steps))


def _finish(ws: CoreWorkspace, family: int, order: Sequence[str], twist: int = 1) -> Canonical:
    """Reorder and rename the core to the table's names, then check it against the table row."""
    ws.rebase(reorder(ws.pres.center, list(order)))
    ws.rebase(rename(ws.pres.center, dict(zip(order, FAMILY_NAMES[family]))))

    p = ws.pres.p
    m = tuple(
        p_valuation(f.order.n, p) for f in ws.pres.center.factors if f.order.is_finite
    )
    if family == 7 and m[1] < m[2]:
        raise ClassificationError(f"Family 7 core has m2 < m3: {m}")
    form = CanonicalForm(family=family, p=p, m=m, twist=twist)
    expected = canonical_presentation(form, with_complement=False)
    if ws.pres != expected:
        raise ClassificationError(f"Core {ws.pres} does not match the row of {form}: {expected}")
    logger.info(f"Classified core as {form}")
    return Canonical(form, ws.pres, tuple(ws.steps))


def _coset_with_value(data: CoreData, wanted: Sequence[int], skip: Sequence[Tuple[int, int]] = ()):
    for coset in COSETS:
        if coset not in skip and data.value(coset) == list(wanted):
            return coset
    return None


def _solve(data: CoreData, target: Sequence[int]) -> List[int]:
    coset = solve_combination([list(data.a), list(data.b)], target, data.p)
    if coset is None:
        raise ClassificationError(f"No coset has p-th power {list(target)} mod p")
    return coset


def classify_rank1(pres: GroupPresentation) -> ClassifyOutcome:
    """
    Family 1 (x^p = y^p = 1) or family 2 (x^p = y^p = t1); a rank-1 core never splits.

    Args:
        pres: Located core with center <t1>

    Returns:
        Canonical outcome
    """
    ws = CoreWorkspace(pres)
    data = ws.data()
    if data.rank != 1:
        raise ClassificationError(f"classify_rank1 needs a rank-1 center, got {pres.center}")
    p = data.p
    logger.info("Classifying rank-1 core")

    if data.quadratic:
        zeros = [c for c in COSETS if not any(data.value(c))]
        if zeros:
            if zeros[:2] != [(1, 0), (0, 1)]:
                ws.generators(zeros[:2])
            family = 1
        else:
            family = 2
    else:
        a, b = data.a[0], data.b[0]
        if a == 0 and b == 0:
            family = 1
        else:
            r1 = [inv_mod(a, p), 0] if a else [0, inv_mod(b, p)]
            kernel = [(-b) % p, a]
            ws.generators([r1, [(u + v) % p for u, v in zip(r1, kernel)]])
            family = 2
    ws.reduce()
    return _finish(ws, family, ws.pres.center.names)


def classify_rank2(pres: GroupPresentation) -> ClassifyOutcome:
    """
    Families 3 to 6, or a split when the powers do not need both factors.

    x^p lands in <s> (families 3 and 5) exactly when some non-central coset has
    trivial p-th power modulo p; otherwise x^p = t1^twist and y^p = z2.

    Args:
        pres: Located core with center <t1> x <z2>

    Returns:
        Canonical outcome or SplitFound
    """
    ws = CoreWorkspace(pres)
    data = ws.data()
    if data.rank != 2:
        raise ClassificationError(f"classify_rank2 needs a rank-2 center, got {pres.center}")
    logger.info("Classifying rank-2 core")
    split = _split(ws, *data.minimal_summand())
    if split:
        return split

    p = data.p
    t1, z2 = data.names
    infinite = not data.orders[1].is_finite
    twist = 1

    if data.quadratic:
        kernel = _coset_with_value(data, [0, 0])
        if kernel is not None:
            partner = next(c for c in COSETS if c != kernel and data.value(c)[1])
            ws.generators([kernel, partner])
            family = 5 if infinite else 3
        else:
            x_coset = _coset_with_value(data, [1, 0])
            if x_coset is None:
                raise ClassificationError("No coset squares to t1")
            partner = next(c for c in COSETS if c != x_coset)
            ws.generators([x_coset, partner])
            family = 6 if infinite else 4
    else:
        rows, _ = data.rref([list(data.a), list(data.b)])
        if len(rows) == 1:
            alpha, beta = data.a[1], data.b[1]
            r2 = [inv_mod(alpha, p), 0] if alpha else [0, inv_mod(beta, p)]
            ws.generators([[beta % p, (-alpha) % p], r2])
            family = 5 if infinite else 3
        else:
            v1 = _solve(data, data.unit(0))
            v2 = _solve(data, data.unit(1))
            det = (v1[0] * v2[1] - v1[1] * v2[0]) % p
            if infinite:
                # y may be replaced by y^-1 modulo the center; pick the sign that keeps twist small.
                sign = 1 if inv_mod(det, p) <= (p - 1) // 2 or p == 2 else -1
                ws.generators([v1, [(sign * v) % p for v in v2]])
                family = 6
            else:
                scale = inv_mod(det, p)
                ws.generators([v1, [(scale * v) % p for v in v2]])
                family = 4

    ws.reduce()
    if family in (4, 6):
        twist = ws.pres.xp.get(t1) % p
        if family == 4 and twist != 1:
            raise ClassificationError(f"Family 4 core has x^p = t1^{twist}")
    ws.absorb("yp", z2)
    return _finish(ws, family, [t1, z2], twist=twist)


def _roles(data: CoreData) -> Tuple[int, int, int]:
    """(family, index carrying x^p, index carrying y^p) for a rank-3 core."""
    finite = [k for k in (1, 2) if data.orders[k].is_finite]
    if len(finite) == 2:
        first, second = sorted((1, 2), key=lambda k: (-data.orders[k].n, k))
        return 7, first, second
    if len(finite) == 1:
        return 8, finite[0], 3 - finite[0]
    return 9, 1, 2


def classify_rank3(pres: GroupPresentation) -> ClassifyOutcome:
    """
    Families 7 to 9, or a split.

    Canonical cores have x^p and y^p on the two non-t1 factors. The roles follow
    the factor orders: the larger finite order goes to x^p in family 7, and the
    finite factor goes to x^p in family 8.

    Args:
        pres: Located core with center <t1> x <z2> x <z3>

    Returns:
        Canonical outcome or SplitFound
    """
    ws = CoreWorkspace(pres)
    data = ws.data()
    if data.rank != 3:
        raise ClassificationError(f"classify_rank3 needs a rank-3 center, got {pres.center}")
    logger.info("Classifying rank-3 core")
    split = _split(ws, *data.minimal_summand())
    if split:
        return split

    family, x_index, y_index = _roles(data)
    if data.quadratic:
        by_projection: Dict[Tuple[int, int], Tuple[int, int]] = {
            tuple(data.value(c)[1:]): c for c in COSETS
        }
        x_coset = by_projection[tuple(data.unit(x_index)[1:])]
        y_coset = by_projection[tuple(data.unit(y_index)[1:])]
    else:
        rows, pivots = data.rref([list(data.a), list(data.b)])
        if sorted(pivots) != [1, 2]:
            raise ClassificationError(f"Power images have pivots {pivots}, expected [1, 2]")
        row_for = dict(zip(pivots, rows))
        x_coset = _solve(data, row_for[x_index])
        y_coset = _solve(data, row_for[y_index])
    ws.generators([x_coset, y_coset])

    names = data.names
    ws.reduce()
    ws.absorb("xp", names[x_index])
    ws.absorb("yp", names[y_index])
    return _finish(ws, family, [names[0], names[x_index], names[y_index]])


def classify_core(pres: GroupPresentation) -> ClassifyOutcome:
    rank = pres.center.rank
    if rank == 1:
        return classify_rank1(pres)
    if rank == 2:
        return classify_rank2(pres)
    if rank == 3:
        return classify_rank3(pres)
    raise ClassificationError(f"Core center has rank {rank}, expected 1 to 3")
