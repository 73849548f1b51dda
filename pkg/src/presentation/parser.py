"""Parser for the presentation DSL."""

import logging
from typing import Any, Dict, List, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from src.abelian import CentralVector, CyclicOrder, FgAbelian
from src.errors import PresentationSyntaxError, PresentationValidationError
from src.presentation.model import GroupPresentation, ViolationKind, validate

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: "group" "{" stmt (";" stmt)* ";"? "}"

?stmt: prime_stmt
     | center_stmt
     | comm_stmt
     | xp_stmt
     | yp_stmt

prime_stmt: "prime" INT
center_stmt: "center" factor ("," factor)*
comm_stmt: "comm" word
xp_stmt: "xp" word
yp_stmt: "yp" word

factor: NAME ":" (INT | INF)

word: ONE
    | term+
term: NAME ("^" SIGNED_INT)?

INF: "inf"
ONE: "1"
NAME: /[A-Za-z_][A-Za-z0-9_]*/
COMMENT: /#[^\n]*/

%import common.INT
%import common.SIGNED_INT
%import common.WS
%ignore WS
%ignore COMMENT
"""

STATEMENTS = ("prime", "center", "comm", "xp", "yp")

_parser = Lark(GRAMMAR, parser="lalr", propagate_positions=True)


class _PresentationTransformer(Transformer):
    """Turns the parse tree into (keyword, value, line, column) statements."""

    def term(self, children) -> Tuple[str, int]:
        name = str(children[0])
        exponent = int(children[1]) if len(children) > 1 else 1
        return name, exponent

    def word(self, children) -> List[Tuple[str, int]]:
        if len(children) == 1 and not isinstance(children[0], tuple):
            return []
        return list(children)

    def factor(self, children) -> Tuple[str, str, int, int]:
        name, order = children
        return str(name), str(order), order.line, order.column

    @v_args(meta=True)
    def prime_stmt(self, meta, children):
        return "prime", int(children[0]), meta.line, meta.column

    @v_args(meta=True)
    def center_stmt(self, meta, children):
        return "center", list(children), meta.line, meta.column

    @v_args(meta=True)
    def comm_stmt(self, meta, children):
        return "comm", children[0], meta.line, meta.column

    @v_args(meta=True)
    def xp_stmt(self, meta, children):
        return "xp", children[0], meta.line, meta.column

    @v_args(meta=True)
    def yp_stmt(self, meta, children):
        return "yp", children[0], meta.line, meta.column

    def start(self, children):
        return list(children)


def _syntax_error(exc: UnexpectedInput) -> PresentationSyntaxError:
    if isinstance(exc, UnexpectedCharacters):
        expected = exc.allowed or set()
        message = f"Unexpected character {exc.char!r}"
    elif isinstance(exc, UnexpectedEOF):
        expected = exc.expected or []
        message = "Unexpected end of input"
    elif isinstance(exc, UnexpectedToken):
        expected = exc.expected or set()
        message = f"Unexpected token {str(exc.token)!r}"
    else:
        expected = set()
        message = "Malformed presentation"
    line = exc.line if getattr(exc, "line", -1) and exc.line > 0 else None
    column = exc.column if line is not None else None
    return PresentationSyntaxError(message, line=line, column=column, expected=expected)


def _collect(statements: List[Tuple[str, Any, int, int]], text: str) -> Dict[str, Any]:
    found: Dict[str, Any] = {}
    for keyword, value, line, column in statements:
        if keyword in found:
            raise PresentationSyntaxError(
                f"Duplicate '{keyword}' statement", line=line, column=column
            )
        found[keyword] = value
    missing = [k for k in STATEMENTS if k not in found]
    if missing:
        lines = text.rstrip().splitlines() or [""]
        raise PresentationSyntaxError(
            f"Missing '{missing[0]}' statement",
            line=len(lines),
            column=len(lines[-1]),
            expected=missing,
        )
    return found


def _to_vector(terms: List[Tuple[str, int]], trivial: set) -> CentralVector:
    return CentralVector(tuple((name, e) for name, e in terms if name not in trivial))


def build_presentation(raw: GroupPresentation) -> GroupPresentation:
    """Reduce exponents and validate; shared by the DSL and JSON front ends."""
    violations = [v for v in validate(raw) if v.kind is not ViolationKind.UNREDUCED_EXPONENT]
    if violations:
        raise PresentationValidationError(violations)
    return raw.reduced()


def parse(text: str) -> GroupPresentation:
    """
    Parse DSL text into a validated presentation.

    Args:
        text: Source such as ``group { prime 2; center t1:2; comm t1; xp 1; yp 1 }``

    Returns:
        Presentation with exponents reduced modulo finite factor orders
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as exc:
        raise _syntax_error(exc) from exc

    found = _collect(_PresentationTransformer().transform(tree), text)

    pairs = []
    trivial = set()
    for name, order_token, line, column in found["center"]:
        order = CyclicOrder.parse(order_token) if order_token == "inf" else int(order_token)
        if order == 0:
            raise PresentationSyntaxError("Factor order must be positive", line=line, column=column)
        if order == 1:
            trivial.add(name)
        pairs.append((name, order))
    names = [name for name, _ in pairs]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        raise PresentationSyntaxError(f"Duplicate factor name {duplicates[0]!r}")

    raw = GroupPresentation(
        p=found["prime"],
        center=FgAbelian.of(pairs),
        s=_to_vector(found["comm"], trivial),
        xp=_to_vector(found["xp"], trivial),
        yp=_to_vector(found["yp"], trivial),
    )
    pres = build_presentation(raw)
    logger.debug(f"Parsed presentation {pres}")
    return pres
