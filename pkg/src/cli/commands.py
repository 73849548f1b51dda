"""Command model and runner shared by the typer app and the tests."""

import copy
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from src.abelian import invariant_factors
from src.classify import canonical_iso, canonical_presentation, classify, describe_difference
from src.cli.checks import CheckSuite
from src.cli.enumeration import enumerate_forms, parse_families
from src.decompose import decompose
from src.errors import (
    CpxcpError,
    PresentationSyntaxError,
    PresentationValidationError,
    UsageError,
)
from src.normalize import steps_to_json
from src.oracle import build_table, export_table
from src.presentation import GroupPresentation, PresentationDocument, load_presentation
from src.reporting import JsonReport, TextReport
from src.utils import load_config

logger = logging.getLogger(__name__)

Verb = Literal["classify", "decompose", "isomorphic", "validate", "enumerate", "check", "table"]

# Number of input presentations each verb takes.
ARITY: Dict[str, int] = {
    "classify": 1,
    "decompose": 1,
    "isomorphic": 2,
    "validate": 1,
    "enumerate": 0,
    "check": 1,
    "table": 1,
}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Command(BaseModel):
    """One CLI invocation: a verb, its inputs and flags."""

    model_config = ConfigDict(frozen=True)

    verb: Verb
    inputs: Tuple[str, ...] = ()
    json_output: bool = False
    max_order: Optional[int] = None
    seed: Optional[int] = None
    p: Optional[int] = None
    max_m: Optional[int] = None
    families: Optional[str] = None

    @model_validator(mode="after")
    def _check_inputs(self) -> "Command":
        expected = ARITY[self.verb]
        if len(self.inputs) != expected:
            raise ValueError(f"{self.verb} takes {expected} input(s), got {len(self.inputs)}")
        return self


def _read(source: str) -> GroupPresentation:
    if source.endswith((".grp", ".json")) and not Path(source).is_file():
        raise UsageError(f"Cannot read {source}: no such file")
    return load_presentation(source)


class CommandRunner:
    """Executes commands against a configuration and returns (exit code, output lines)."""

    def __init__(self, config: Dict[str, Any]):
        """Initialize with a configuration dictionary from load_config."""
        self.config = config

    def _effective_config(self, command: Command) -> Dict[str, Any]:
        config = copy.deepcopy(self.config)
        if command.max_order is not None:
            config.setdefault("oracle", {})["max_order"] = command.max_order
        if command.seed is not None:
            config.setdefault("scramble", {})["seed"] = command.seed
        return config

    def run(self, command: Command) -> Tuple[int, List[str]]:
        """
        Execute one command.

        Args:
            command: Validated command

        Returns:
            (exit code, output lines): 0 on success, 1 when validation or a check
            fails, 2 on usage errors and unparsable input
        """
        config = self._effective_config(command)
        handler = getattr(self, f"_{command.verb}")
        use_json = command.json_output or config.get("output", {}).get("json", False)
        try:
            return handler(command, config, use_json)
        except UsageError as exc:
            logger.debug(f"Usage error in {command.verb}", exc_info=True)
            return EXIT_USAGE, [f"error: {exc}"]
        except PresentationSyntaxError as exc:
            logger.debug(f"Unparsable input to {command.verb}", exc_info=True)
            return EXIT_USAGE, [f"error: {exc}"]
        except OSError as exc:
            logger.debug(f"I/O error in {command.verb}", exc_info=True)
            return EXIT_USAGE, [f"error: {exc}"]
        except CpxcpError as exc:
            logger.debug(f"{command.verb} failed", exc_info=True)
            return EXIT_FAILED, [f"error: {exc}"]

    def _lines(self, config: Dict[str, Any], use_json: bool, records, text) -> List[str]:
        if use_json:
            return JsonReport(config).render(records)
        return text(TextReport(config))

    def _classify(self, command: Command, config: Dict[str, Any], use_json: bool):
        report = classify(_read(command.inputs[0]))
        return EXIT_OK, self._lines(
            config, use_json, [report.to_json()], lambda r: r.classify(report)
        )

    def _decompose(self, command: Command, config: Dict[str, Any], use_json: bool):
        result = decompose(_read(command.inputs[0]))
        torsion, free_rank = invariant_factors(result.a)
        record = {
            "d": PresentationDocument.from_presentation(result.d).model_dump(mode="json"),
            "a": {
                "factors": [[f.name, f.order.to_json()] for f in result.a.factors],
                "torsion": torsion,
                "free_rank": free_rank,
            },
            "moves": steps_to_json(result.steps),
        }
        return EXIT_OK, self._lines(config, use_json, [record], lambda r: r.decompose(result))

    def _isomorphic(self, command: Command, config: Dict[str, Any], use_json: bool):
        first = classify(_read(command.inputs[0])).form
        second = classify(_read(command.inputs[1])).form
        same = canonical_iso(first, second)
        reason = describe_difference(first, second)
        record = {"isomorphic": same, "reason": reason}
        return EXIT_OK, self._lines(
            config, use_json, [record], lambda r: r.isomorphic(first, second, reason)
        )

    def _validate(self, command: Command, config: Dict[str, Any], use_json: bool):
        try:
            pres = _read(command.inputs[0])
        except PresentationValidationError as exc:
            violations = [str(v) for v in exc.violations]
            record = {"valid": False, "violations": violations}
            return EXIT_FAILED, self._lines(
                config, use_json, [record], lambda r: r.validate(None, violations)
            )
        record = {"valid": True, "violations": [], "order": pres.order()}
        return EXIT_OK, self._lines(config, use_json, [record], lambda r: r.validate(pres, []))

    def _enumerate(self, command: Command, config: Dict[str, Any], use_json: bool):
        defaults = config.get("enumerate", {})
        p = command.p if command.p is not None else defaults.get("p", 2)
        max_m = command.max_m if command.max_m is not None else defaults.get("max_m", 2)
        families = parse_families(command.families or defaults.get("families", "1-9"))
        forms = list(enumerate_forms(p, max_m, families))
        records = []
        for form in forms:
            record = form.to_json()
            record["presentation"] = PresentationDocument.from_presentation(
                canonical_presentation(form)
            ).model_dump(mode="json")
            records.append(record)
        return EXIT_OK, self._lines(config, use_json, records, lambda r: r.enumerate(forms))

    def _check(self, command: Command, config: Dict[str, Any], use_json: bool):
        results = CheckSuite(config).run(_read(command.inputs[0]))
        code = EXIT_FAILED if any(r.failed for r in results) else EXIT_OK
        return code, self._lines(
            config, use_json, [r.to_json() for r in results], lambda r: r.check(results)
        )

    def _table(self, command: Command, config: Dict[str, Any], use_json: bool):
        max_order = config.get("oracle", {}).get("max_order", 4096)
        table = build_table(_read(command.inputs[0]), max_order)
        if use_json:
            record = {"order": table.n, "table": table.table.tolist(), "labels": list(table.labels)}
            return EXIT_OK, JsonReport(config).render([record])
        return EXIT_OK, export_table(table).rstrip("\n").split("\n")


def run(command: Command, config: Optional[Dict[str, Any]] = None) -> Tuple[int, List[str]]:
    """Run ``command`` with ``config`` (load_config() when omitted)."""
    if config is None:
        config = load_config()
    return CommandRunner(config).run(command)
