"""Oracle and symbolic validation suite behind the ``check`` command."""

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List

from src.classify import ClassifyReport, canonical_presentation, classify, scramble
from src.decompose import decompose
from src.errors import CpxcpError
from src.normalize import replay
from src.oracle import (
    brute_iso,
    build_table,
    center_and_quotient,
    direct_factor_search,
)
from src.presentation import GroupPresentation

logger = logging.getLogger(__name__)

ORACLE_CHECKS = (
    "latin_square",
    "associativity",
    "quotient_is_cpxcp",
    "canonical_isomorphism",
    "decomposition_isomorphism",
    "direct_factor",
)

# Exhaustive associativity up to this order, sampled triples above it.
EXHAUSTIVE_ASSOCIATIVITY = 81
ASSOCIATIVITY_SAMPLES = 100_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_json(self) -> Dict[str, Any]:
        return {"property": self.name, "status": self.status, "detail": self.detail}


def _outcome(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", detail)


class CheckSuite:
    """Runs every property that applies to one presentation."""

    def __init__(self, config: Dict[str, Any]):
        """Initialize with oracle bounds and scramble settings."""
        self.config = config
        oracle = config.get("oracle", {})
        self.max_order = oracle.get("max_order", 4096)
        self.iso_max_order = oracle.get("iso_max_order", 729)
        self.direct_factor_max_order = oracle.get("direct_factor_max_order", 512)
        scrambles = config.get("scramble", {})
        self.rounds = scrambles.get("rounds", 100)
        self.moves_per_round = scrambles.get("moves_per_round", 12)
        self.seed = scrambles.get("seed", 20240101)

    def _guard(self, name: str, check: Callable[[], CheckResult]) -> CheckResult:
        try:
            return check()
        except CpxcpError as exc:
            logger.debug(f"Check {name} raised", exc_info=True)
            return CheckResult(name, "fail", f"{type(exc).__name__}: {exc}")

    def run(self, pres: GroupPresentation) -> List[CheckResult]:
        """
        Run the symbolic checks, then the oracle checks when the group is small enough.

        Args:
            pres: Valid presentation

        Returns:
            One result per property, in a fixed order
        """
        logger.info(f"Checking {pres}")
        report = classify(pres)
        results = [
            self._guard("replay", lambda: self._replay(pres, report)),
            self._guard("canonical_round_trip", lambda: self._round_trip(report)),
            self._guard("scramble_invariance", lambda: self._scramble(pres, report)),
            self._guard("decomposition_order", lambda: self._decomposition_order(pres)),
        ]

        order = pres.order()
        if order is None:
            reason = "infinite group: the oracle needs a finite center"
            return results + [CheckResult(name, "skip", reason) for name in ORACLE_CHECKS]
        if order > self.max_order:
            reason = f"order {order} exceeds the table bound {self.max_order}"
            return results + [CheckResult(name, "skip", reason) for name in ORACLE_CHECKS]

        table = build_table(pres, self.max_order)
        results.append(_outcome("latin_square", table.is_latin()))
        if table.n <= EXHAUSTIVE_ASSOCIATIVITY:
            results.append(_outcome("associativity", table.is_associative(), "exhaustive"))
        else:
            sampled = table.is_associative(samples=ASSOCIATIVITY_SAMPLES, seed=self.seed)
            detail = f"{ASSOCIATIVITY_SAMPLES} sampled triples"
            results.append(_outcome("associativity", sampled, detail))
        center, quotient_ok = center_and_quotient(table)
        results.append(_outcome("quotient_is_cpxcp", quotient_ok, f"center of order {len(center)}"))

        if table.n > self.iso_max_order:
            reason = f"order {table.n} exceeds the isomorphism bound {self.iso_max_order}"
            results.append(CheckResult("canonical_isomorphism", "skip", reason))
            results.append(CheckResult("decomposition_isomorphism", "skip", reason))
        else:
            results.append(
                self._guard("canonical_isomorphism", lambda: self._canonical_iso(table, report))
            )
            results.append(
                self._guard("decomposition_isomorphism", lambda: self._product_iso(table, pres))
            )

        if table.n > self.direct_factor_max_order:
            reason = (
                f"order {table.n} exceeds the direct factor bound {self.direct_factor_max_order}"
            )
            results.append(CheckResult("direct_factor", "skip", reason))
        else:
            results.append(self._guard("direct_factor", lambda: self._direct_factor(table, report)))
        return results

    def _replay(self, pres: GroupPresentation, report: ClassifyReport) -> CheckResult:
        ok = replay(pres, report.steps) == report.presentation
        return _outcome("replay", ok, f"{len(report.steps)} steps")

    def _round_trip(self, report: ClassifyReport) -> CheckResult:
        again = classify(canonical_presentation(report.form)).form
        return _outcome("canonical_round_trip", again == report.form, str(again))

    def _scramble(self, pres: GroupPresentation, report: ClassifyReport) -> CheckResult:
        rng = random.Random(self.seed)
        for round_index in range(self.rounds):
            scrambled = scramble(pres, rng, self.moves_per_round)
            form = classify(scrambled).form
            if form != report.form:
                return _outcome("scramble_invariance", False, f"round {round_index} gave {form}")
        return _outcome("scramble_invariance", True, f"{self.rounds} rounds")

    def _decomposition_order(self, pres: GroupPresentation) -> CheckResult:
        result = decompose(pres)
        product = result.product()
        same_rank = product.center.free_rank == pres.center.free_rank
        same_order = product.order() == pres.order()
        detail = f"D center {result.d.center}"
        return _outcome("decomposition_order", same_rank and same_order, detail)

    def _canonical_iso(self, table, report: ClassifyReport) -> CheckResult:
        canonical = build_table(canonical_presentation(report.form), self.max_order)
        found = brute_iso(table, canonical, self.iso_max_order) is not None
        return _outcome("canonical_isomorphism", found, str(report.form))

    def _product_iso(self, table, pres: GroupPresentation) -> CheckResult:
        product = build_table(decompose(pres).product(), self.max_order)
        found = brute_iso(table, product, self.iso_max_order) is not None
        return _outcome("decomposition_isomorphism", found)

    def _direct_factor(self, table, report: ClassifyReport) -> CheckResult:
        split = direct_factor_search(table, self.direct_factor_max_order)
        expected = not report.form.complement.is_trivial
        detail = "split found" if split is not None else "indecomposable"
        return _outcome("direct_factor", (split is not None) == expected, detail)
