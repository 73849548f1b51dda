"""Generates human-readable reports from jinja2 templates."""

import logging
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import DictLoader, Environment, StrictUndefined

from src.classify import CanonicalForm, ClassifyReport
from src.decompose import DecompositionResult
from src.normalize import GeneratorMove, Rebase
from src.presentation import GroupPresentation, emit

logger = logging.getLogger(__name__)

TEMPLATES = {
    "classify": """\
{{ form }}
  family:     {{ form.family }}
  p:          {{ form.p }}
  m:          {{ form.m | join(", ") }}
{% if form.family == 6 %}
  twist:      {{ form.twist }}
{% endif %}
  free rank:  {{ form.infinite_rank }}
  complement: {{ complement }}
  steps:      {{ steps | length }}
{% for step in steps %}
    {{ loop.index }}. {{ step }}
{% endfor %}
canonical core:
{{ core }}
""",
    "decompose": """\
D:
{{ core }}
A: {{ complement }}
steps: {{ steps }}
""",
    "isomorphic": """\
{% if isomorphic %}
isomorphic: {{ first }}
{% else %}
not isomorphic: {{ reason }}
  {{ first }}
  {{ second }}
{% endif %}
""",
    "validate": """\
{% if violations %}
invalid ({{ violations | length }} violation{{ "s" if violations | length > 1 else "" }}):
{% for violation in violations %}
  - {{ violation }}
{% endfor %}
{% else %}
valid: {{ summary }}
{% endif %}
""",
    "enumerate": """\
{% for form in forms %}
{{ form }}
{% endfor %}
{{ forms | length }} instance{{ "s" if forms | length != 1 else "" }}
""",
    "check": """\
{% for result in results %}
[{{ result.status | upper }}] {{ result.name }}
{%- if result.detail %}: {{ result.detail }}{% endif %}

{% endfor %}
{{ passed }} passed, {{ failed }} failed, {{ skipped }} skipped
""",
}


class TextReport:
    """Renders command results for terminals."""

    def __init__(self, config: Dict[str, Any]):
        """Initialize the template environment."""
        self.config = config
        self.env = Environment(
            loader=DictLoader(TEMPLATES),
            trim_blocks=True,
            lstrip_blocks=True,
            undefined=StrictUndefined,
            keep_trailing_newline=False,
        )

    def _render(self, name: str, **context: Any) -> List[str]:
        text = self.env.get_template(name).render(**context)
        return text.rstrip("\n").split("\n")

    def classify(self, report: ClassifyReport) -> List[str]:
        complement = report.form.complement
        described = "trivial"
        if not complement.is_trivial:
            described = f"torsion {list(complement.torsion)}, free rank {complement.free_rank}"
        return self._render(
            "classify",
            form=report.form,
            complement=described,
            steps=[_describe_step(s) for s in report.steps],
            core=emit(report.presentation),
        )

    def decompose(self, result: DecompositionResult) -> List[str]:
        return self._render(
            "decompose",
            core=emit(result.d),
            complement=str(result.a),
            steps=len(result.steps),
        )

    def isomorphic(
        self, first: CanonicalForm, second: CanonicalForm, reason: Optional[str]
    ) -> List[str]:
        return self._render(
            "isomorphic", isomorphic=reason is None, first=first, second=second, reason=reason
        )

    def validate(self, pres: Optional[GroupPresentation], violations: Sequence[str]) -> List[str]:
        summary = ""
        if pres is not None:
            summary = f"order {pres.order() or 'infinite'}, center {pres.center}"
        return self._render("validate", violations=list(violations), summary=summary)

    def enumerate(self, forms: Sequence[CanonicalForm]) -> List[str]:
        return self._render("enumerate", forms=list(forms))

    def check(self, results: Sequence[Any]) -> List[str]:
        counts = {
            status: sum(1 for r in results if r.status == status)
            for status in ("pass", "fail", "skip")
        }
        return self._render(
            "check",
            results=list(results),
            passed=counts["pass"],
            failed=counts["fail"],
            skipped=counts["skip"],
        )


def _describe_step(step: Any) -> str:
    if isinstance(step, GeneratorMove):
        return str(step)
    if isinstance(step, Rebase):
        images = ", ".join(
            f"{name} -> {image}" for name, image in zip(step.change.old.names, step.change.images)
        )
        return f"rebase center ({images}) onto {step.change.new}"
    return f"restrict center to {', '.join(step.names)}"
